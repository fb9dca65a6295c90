"""Automatic annotation: noun groups, subject location and sentence sections."""
from core.services.chunking.chunk_rules import ChunkRules, load_rules, parse_rules
from core.services.chunking.chunker import (
    NOUN_GROUP,
    SUBJECT,
    NounGroupChunker,
    SentenceSections,
    annotate,
    find_noun_groups,
    find_subject,
    section_stats,
    split_sections,
)

__all__ = [
    "ChunkRules",
    "load_rules",
    "parse_rules",
    "NOUN_GROUP",
    "SUBJECT",
    "NounGroupChunker",
    "SentenceSections",
    "annotate",
    "find_noun_groups",
    "find_subject",
    "section_stats",
    "split_sections",
]
