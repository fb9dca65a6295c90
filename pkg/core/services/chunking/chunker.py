"""Noun-group chunking, subject location and sentence sections."""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Union

import nltk

from core.models.stats import SectionStats
from core.services.chunking.chunk_rules import ChunkRules
from core.services.corpus.corpus import Corpus, TaggedSentence
from core.services.corpus.spans import Annotation, Span
from core.services.errors.exceptions import ChunkingError
from core.utils.logger import logger

NOUN_GROUP = "noun-group"
SUBJECT = "subject"
PRE_SUBJECT = "pre-subject"
PREDICATE = "predicate"

_CHUNK_LABEL = "NG"

SentenceLike = Union[TaggedSentence, Sequence[str]]


def _tag_names(sentence: SentenceLike) -> List[str]:
    if isinstance(sentence, TaggedSentence):
        if not sentence.is_raw:
            raise ChunkingError("cannot chunk a sentence that already carries hypertags")
        return sentence.names
    return list(sentence)


def _alternation(tags) -> str:
    return "<" + "|".join(sorted(tags)) + ">"


class NounGroupChunker:
    """
    Regular-expression chunker over tag sequences.
    
    Tokens are fed to nltk as (position, tag) pairs so chunk leaves carry
    their sentence positions back out.
    """
    
    def __init__(self, rules: ChunkRules, label: str = NOUN_GROUP):
        self.rules = rules
        self.label = label
        self.grammar = self._build_grammar(rules)
        self._parser = nltk.RegexpParser(self.grammar)
    
    @staticmethod
    def _build_grammar(rules: ChunkRules) -> str:
        patterns = []
        nouns = rules.noun_tags - rules.pronoun_tags
        if nouns:
            modifiers = rules.modifier_tags - rules.pronoun_tags
            prefix = _alternation(modifiers) + "*" if modifiers else ""
            patterns.append("{" + prefix + _alternation(nouns) + "}")
        if rules.pronoun_tags:
            patterns.append("{" + _alternation(rules.pronoun_tags) + "}")
        body = "\n".join(f"    {pattern}" for pattern in patterns)
        return f"{_CHUNK_LABEL}:\n{body}"
    
    def chunk(self, tags: Sequence[str]) -> List[Span]:
        """Leftmost-longest noun groups, disjoint and in sentence order."""
        if not tags:
            return []
        tree = self._parser.parse(list(enumerate(tags)))
        spans = []
        for child in tree:
            if isinstance(child, nltk.Tree) and child.label() == _CHUNK_LABEL:
                positions = [position for position, _ in child.leaves()]
                spans.append(Span(self.label, positions[0], positions[-1] + 1))
        return spans


@lru_cache(maxsize=32)
def _chunker_for(rules: ChunkRules) -> NounGroupChunker:
    return NounGroupChunker(rules)


@dataclass(frozen=True)
class SentenceSections:
    """Pre-subject, subject and predicate ranges partitioning one sentence."""
    pre_subject: Span
    subject: Span
    predicate: Span
    
    def __post_init__(self):
        if self.pre_subject.start != 0:
            raise ValueError("pre-subject section must start the sentence")
        if self.pre_subject.end != self.subject.start or self.subject.end != self.predicate.start:
            raise ValueError("sections must be contiguous")
    
    @property
    def length(self) -> int:
        return self.predicate.end
    
    @property
    def is_imperative(self) -> bool:
        return self.subject.is_empty
    
    def boundaries(self) -> List[int]:
        """Inner section boundaries, each a position between two tokens."""
        return [self.subject.start, self.subject.end]


def find_noun_groups(sentence: SentenceLike, rules: ChunkRules) -> List[Span]:
    """
    Maximal modifier* noun spans, plus lone pronouns.
    
    Examples:
        ADJ ADJ NOUN VFIN -> [(0,3)]
        NOUN -> [(0,1)]
        VFIN PREP -> []
    """
    return _chunker_for(rules).chunk(_tag_names(sentence))


def _first_finite_verb(tags: Sequence[str], rules: ChunkRules) -> int:
    for position, tag in enumerate(tags):
        if tag in rules.finite_verb_tags:
            return position
    raise ChunkingError("no finite verb")


def _determiner_start(tags: Sequence[str], start: int, rules: ChunkRules) -> int:
    while start > 0 and tags[start - 1] in rules.determiner_tags:
        start -= 1
    return start


def find_subject(sentence: SentenceLike, rules: ChunkRules) -> Span:
    """
    Locate the subject of a declarative sentence.
    
    The subject starts at the first noun group before the first finite
    verb, extended left over determiners, and runs up to the verb. When
    another noun group starts right where the head group ends (an
    embedded clause such as "the shirt | he wants"), the subject stops
    at the head group. Noun groups opening a prepositional phrase are
    passed over when the rules declare preposition tags.
    
    Returns:
        Subject span; empty at the verb position when there is no subject
    
    Raises:
        ChunkingError: If the sentence has no finite verb
    """
    tags = _tag_names(sentence)
    verb = _first_finite_verb(tags, rules)
    groups = [group for group in find_noun_groups(tags, rules) if group.end <= verb]
    
    for index, group in enumerate(groups):
        start = _determiner_start(tags, group.start, rules)
        if start > 0 and tags[start - 1] in rules.preposition_tags:
            continue
        end = verb
        following: Optional[Span] = groups[index + 1] if index + 1 < len(groups) else None
        if following is not None and _determiner_start(tags, following.start, rules) == group.end:
            end = group.end
        return Span(SUBJECT, start, end)
    return Span(SUBJECT, verb, verb)


def split_sections(sentence: SentenceLike, subject: Span) -> SentenceSections:
    """Partition a sentence around its subject span."""
    length = len(sentence)
    if not 0 <= subject.start <= subject.end <= length:
        raise ChunkingError(f"subject ({subject.start},{subject.end}) outside sentence of length {length}")
    return SentenceSections(
        pre_subject=Span(PRE_SUBJECT, 0, subject.start),
        subject=Span(SUBJECT, subject.start, subject.end),
        predicate=Span(PREDICATE, subject.end, length),
    )


def annotate(
    sentence: SentenceLike,
    rules: ChunkRules,
    noun_group_class: str = NOUN_GROUP,
    subject_class: str = SUBJECT
) -> Annotation:
    """
    Automatic annotation: noun groups and the subject.
    
    An empty subject (imperative) contributes no span, but the annotation
    still covers the subject class.
    """
    groups = [Span(noun_group_class, g.start, g.end) for g in find_noun_groups(sentence, rules)]
    subject = find_subject(sentence, rules)
    spans = list(groups)
    if not subject.is_empty:
        spans.append(Span(subject_class, subject.start, subject.end))
    logger.debug(f"Chunked {len(groups)} noun groups, subject ({subject.start},{subject.end})")
    return Annotation(spans=tuple(spans), covered=frozenset({noun_group_class, subject_class}))


def section_stats(corpus: Corpus, rules: ChunkRules) -> SectionStats:
    """Subject and pre-subject length ranges found by the subject locator."""
    subject_lengths: List[int] = []
    pre_subject_lengths: List[int] = []
    excluded = 0
    imperatives = 0
    for index, sentence in enumerate(corpus.sentences):
        try:
            sections = split_sections(sentence, find_subject(sentence, rules))
        except ChunkingError as e:
            logger.warning(f"Sentence {index} skipped: {str(e)}")
            excluded += 1
            continue
        pre_subject_lengths.append(sections.pre_subject.length)
        if sections.is_imperative:
            imperatives += 1
        else:
            subject_lengths.append(sections.subject.length)
    return SectionStats(
        sentence_count=len(corpus.sentences),
        excluded_count=excluded,
        imperative_count=imperatives,
        min_subject_length=min(subject_lengths) if subject_lengths else None,
        max_subject_length=max(subject_lengths) if subject_lengths else None,
        min_pre_subject_length=min(pre_subject_lengths) if pre_subject_lengths else None,
        max_pre_subject_length=max(pre_subject_lengths) if pre_subject_lengths else None,
    )
