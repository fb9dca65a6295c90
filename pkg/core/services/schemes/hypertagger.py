"""Hypertag insertion."""
from typing import List, Optional

from core.services.corpus.corpus import TaggedSentence
from core.services.corpus.spans import Annotation, Span, boundary_events
from core.services.errors.exceptions import SchemeError
from core.services.schemes.brackets import validate_brackets
from core.services.schemes.scheme import (
    ANNOTATED_ROLES,
    ROLE_ARBITRARY,
    ROLE_DETERMINER,
    Scheme,
)
from core.services.tagset.tagset import Symbol, Tagset

# 0-based: open before tag position 2, close after tag position 5
ARBITRARY_OPEN = 1
ARBITRARY_CLOSE = 5


def arbitrary_span(constituent: str, length: int) -> Span:
    """Content-blind span; short sentences close at the end, 1-tag sentences get an empty pair after the tag."""
    return Span(constituent, min(ARBITRARY_OPEN, length), min(ARBITRARY_CLOSE, length))


def _describe(sentence_index: Optional[int]) -> str:
    return f"sentence {sentence_index}" if sentence_index is not None else "sentence"


def scheme_spans(
    sentence: TaggedSentence,
    annotation: Annotation,
    scheme: Scheme,
    sentence_index: Optional[int] = None
) -> List[Span]:
    """Spans a scheme brackets in one sentence."""
    spans: List[Span] = []
    for role in scheme.kind.roles:
        constituent = scheme.class_of(role)
        if role == ROLE_ARBITRARY:
            spans.append(arbitrary_span(constituent, len(sentence)))
        elif role == ROLE_DETERMINER:
            spans.extend(
                Span(constituent, position, position + 1)
                for position, symbol in enumerate(sentence.tags)
                if symbol.name in scheme.determiner_tags
            )
        elif role in ANNOTATED_ROLES:
            if not annotation.covers(constituent):
                raise SchemeError(
                    f"{_describe(sentence_index)}: annotation has no {constituent} spans "
                    f"required by {scheme.label}"
                )
            spans.extend(annotation.spans_of(constituent))
    return spans


def apply_scheme(
    sentence: TaggedSentence,
    annotation: Annotation,
    scheme: Scheme,
    tagset: Tagset,
    sentence_index: Optional[int] = None
) -> TaggedSentence:
    """
    Insert the scheme's hypertags into a raw sentence.
    
    Each bracketed span [s, e) becomes open-hypertag before token s and
    close-hypertag before token e. Spans with the same extent nest by
    role: subject outside noun group. When the sentence carries words,
    each hypertag takes its own name as its word.
    
    Raises:
        SchemeError: If the sentence is not raw, the annotation lacks a
            required class, or the result is not well bracketed
    """
    if not sentence.is_raw:
        raise SchemeError(f"{_describe(sentence_index)}: input already carries hypertags")
    spans = scheme_spans(sentence, annotation, scheme, sentence_index)
    if not spans:
        return sentence
    
    events = boundary_events(spans, len(sentence), scheme.rank)
    tags: List[Symbol] = []
    words: List[str] = []
    for position in range(len(sentence) + 1):
        for is_open, span in events[position]:
            symbol = tagset.open_symbol(span.constituent) if is_open else tagset.close_symbol(span.constituent)
            tags.append(symbol)
            if sentence.words is not None:
                words.append(symbol.name)
        if position < len(sentence):
            tags.append(sentence.tags[position])
            if sentence.words is not None:
                words.append(sentence.words[position])
    
    result = TaggedSentence(tags=tuple(tags), words=tuple(words) if sentence.words is not None else None)
    violation = validate_brackets(result)
    if violation is not None:
        raise SchemeError(f"{_describe(sentence_index)}: {scheme.label} output unbalanced {violation}")
    return result
