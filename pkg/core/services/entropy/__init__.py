"""Entropy engine: n-gram counting, H0, H_n and a brute-force oracle.

- count_ngrams / count_segments / count_ngrams_chunked: Build NGramTable instances
- h0, hn, hn_oracle: Entropies in bits per symbol
- profile / profile_segments: H0..H_max_n for a stream or for per-sentence windows
"""
from core.services.entropy.entropy_service import (
    h0,
    hn,
    hn_oracle,
    profile,
    profile_segments,
)
from core.services.entropy.ngram_table import (
    NGramTable,
    as_ids,
    count_ngrams,
    count_ngrams_chunked,
    count_segments,
)

__all__ = [
    "NGramTable",
    "as_ids",
    "count_ngrams",
    "count_ngrams_chunked",
    "count_segments",
    "h0",
    "hn",
    "hn_oracle",
    "profile",
    "profile_segments",
]
