"""Tagged sentences and corpora."""
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from core.models.stats import CorpusStats
from core.services.corpus.spans import Annotation
from core.services.errors.exceptions import CorpusFormatError, InsufficientDataError
from core.services.tagset.tagset import Symbol, Tagset


@dataclass(frozen=True)
class TaggedSentence:
    """One sentence as tagset symbols, optionally with the source words."""
    tags: Tuple[Symbol, ...]
    words: Optional[Tuple[str, ...]] = None
    
    def __post_init__(self):
        object.__setattr__(self, "tags", tuple(self.tags))
        if self.words is not None:
            object.__setattr__(self, "words", tuple(self.words))
        if not self.tags:
            raise CorpusFormatError("sentence has no tags")
        if self.words is not None and len(self.words) != len(self.tags):
            raise CorpusFormatError(f"{len(self.words)} words for {len(self.tags)} tags")
    
    def __len__(self) -> int:
        return len(self.tags)
    
    @property
    def ids(self) -> List[int]:
        return [symbol.id for symbol in self.tags]
    
    @property
    def names(self) -> List[str]:
        return [symbol.name for symbol in self.tags]
    
    @property
    def is_raw(self) -> bool:
        """True when no hypertag has been inserted."""
        return not any(symbol.is_hypertag for symbol in self.tags)
    
    def strip_hypertags(self) -> "TaggedSentence":
        keep = [i for i, symbol in enumerate(self.tags) if not symbol.is_hypertag]
        words = tuple(self.words[i] for i in keep) if self.words is not None else None
        return TaggedSentence(tags=tuple(self.tags[i] for i in keep), words=words)


@dataclass(frozen=True)
class Corpus:
    """Raw sentences over one tagset, with a per-sentence annotation."""
    tagset: Tagset
    sentences: Tuple[TaggedSentence, ...]
    annotations: Tuple[Annotation, ...]
    
    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "annotations", tuple(self.annotations))
        if len(self.annotations) != len(self.sentences):
            raise CorpusFormatError(
                f"{len(self.annotations)} annotations for {len(self.sentences)} sentences"
            )
        for index, sentence in enumerate(self.sentences):
            for symbol in sentence.tags:
                if symbol.id >= len(self.tagset) or self.tagset.symbols[symbol.id] != symbol:
                    raise CorpusFormatError(f"sentence {index}: symbol {symbol.name} is not in the tagset")
            if not sentence.is_raw:
                raise CorpusFormatError(f"sentence {index}: hypertags are not allowed in a raw sentence")
    
    def __len__(self) -> int:
        return len(self.sentences)
    
    @property
    def annotated_classes(self) -> FrozenSet[str]:
        """Classes carried by the file's own (gold) annotation."""
        covered: FrozenSet[str] = frozenset()
        for annotation in self.annotations:
            covered |= annotation.covered
        return covered
    
    @property
    def token_count(self) -> int:
        return sum(len(sentence) for sentence in self.sentences)


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """
    Sentence count, mean sentence length and tagset size.
    
    Punctuation tags count as tokens, so a full stop adds one to the
    sentence length.
    """
    if not corpus.sentences:
        raise InsufficientDataError("corpus is empty")
    return CorpusStats(
        sentence_count=len(corpus.sentences),
        mean_length=corpus.token_count / len(corpus.sentences),
        tagset_size=len(corpus.tagset),
    )
