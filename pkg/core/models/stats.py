"""Corpus and sentence-section statistics models."""
from typing import Optional
from pydantic import BaseModel


class CorpusStats(BaseModel):
    """Size summary of a corpus."""
    sentence_count: int
    mean_length: float  # tokens per sentence, punctuation included
    tagset_size: int


class SectionStats(BaseModel):
    """Lengths of the pre-subject and subject sections across a corpus."""
    sentence_count: int
    excluded_count: int = 0
    imperative_count: int = 0
    min_subject_length: Optional[int] = None
    max_subject_length: Optional[int] = None
    min_pre_subject_length: Optional[int] = None
    max_pre_subject_length: Optional[int] = None
