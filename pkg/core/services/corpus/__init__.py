"""Pre-tagged corpus reading, writing and statistics.

- parse_corpus / load_corpus: Read word/TAG lines with inline constituent brackets
- serialize_corpus: Write a corpus back in the same format
- corpus_stats: Sentence count, mean length, tagset size
"""
from core.services.corpus.corpus import Corpus, TaggedSentence, corpus_stats
from core.services.corpus.corpus_reader import (
    load_corpus,
    parse_corpus,
    serialize_corpus,
    serialize_sentence,
)
from core.services.corpus.spans import Annotation, Span, annotation_violation, boundary_events

__all__ = [
    "Annotation",
    "Corpus",
    "Span",
    "TaggedSentence",
    "annotation_violation",
    "boundary_events",
    "corpus_stats",
    "load_corpus",
    "parse_corpus",
    "serialize_corpus",
    "serialize_sentence",
]
