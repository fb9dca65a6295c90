"""N-gram conditional entropy (bits per symbol) from plug-in estimates."""
import math
from collections import Counter
from typing import Iterable, Optional, Sized, Union

import numpy as np
from scipy.stats import entropy

from core.models.entropy import EntropyProfile
from core.services.entropy.ngram_table import (
    NGramTable,
    as_ids,
    count_ngrams,
    count_ngrams_chunked,
    count_segments,
)
from core.services.errors.exceptions import ConfigurationError, InsufficientDataError


def h0(alphabet: Union[Sized, int]) -> float:
    """Bits needed to pick one symbol with no statistical information: log2(|alphabet|)."""
    size = alphabet if isinstance(alphabet, int) else len(alphabet)
    if size < 1:
        raise InsufficientDataError("alphabet is empty")
    return math.log2(size)


def hn(table: NGramTable) -> float:
    """
    Conditional entropy of the last symbol of an n-gram given the first n-1.
    
    Computed as -sum p(b,j) log2 p(b,j) + sum p(b) log2 p(b), where p(b)
    sums p(b,j) over the final symbol j. For n == 1 the context is empty
    and this is the unigram entropy.
    """
    if not table.counts or table.total == 0:
        raise InsufficientDataError("empty n-gram table")
    joint = float(entropy(table.count_array(), base=2))
    if table.n == 1:
        return max(joint, 0.0)
    contexts = table.context_counts()
    context_entropy = float(entropy(np.fromiter(contexts.values(), dtype=np.float64), base=2))
    return max(joint - context_entropy, 0.0)


def hn_oracle(stream: Iterable, n: int) -> float:
    """
    Brute-force H_n: joint entropy of the n-grams minus joint entropy of their prefixes.
    
    Independent of NGramTable and scipy; used to cross-check `hn`.
    """
    if n < 1:
        raise ConfigurationError(f"n-gram order must be >= 1, got {n}")
    symbols = as_ids(stream)
    if len(symbols) < n:
        raise InsufficientDataError(f"insufficient data for n-gram order {n}")
    windows = [tuple(symbols[i:i + n]) for i in range(len(symbols) - n + 1)]
    total = len(windows)
    joint: Counter = Counter(windows)
    prefixes: Counter = Counter()
    for window, count in joint.items():
        prefixes[window[:-1]] += count
    
    def joint_entropy(counts: Counter) -> float:
        result = 0.0
        for count in counts.values():
            p = count / total
            result -= p * math.log2(p)
        return result
    
    return joint_entropy(joint) - joint_entropy(prefixes)


def _check_max_n(max_n: int) -> None:
    if max_n < 1:
        raise ConfigurationError(f"max_n must be >= 1, got {max_n}")


def _profile_from_table(table: NGramTable, alphabet: Union[Sized, int]) -> EntropyProfile:
    """Every order from suffix marginals of one max_n table, so all orders share its windows."""
    values = {n: hn(table.suffix_marginal(n)) for n in range(1, table.n + 1)}
    return EntropyProfile(h0=h0(alphabet), hn=values)


def profile(
    stream: Iterable,
    alphabet: Union[Sized, int],
    max_n: int,
    chunk_size: Optional[int] = None,
    workers: int = 1
) -> EntropyProfile:
    """
    H0 and H1..H_max_n over one stream.
    
    All orders are measured on the same len(stream) - max_n + 1 windows:
    H_n conditions the last symbol of each window on the n-1 symbols
    before it. The profile is therefore non-increasing in n.
    
    Args:
        stream: Symbols or symbol ids
        alphabet: Tagset (or its size) fixing H0
        max_n: Highest n-gram order
        chunk_size: Count in chunks of this many windows when set
        workers: Processes used for chunked counting
    """
    _check_max_n(max_n)
    symbols = as_ids(stream)
    if len(symbols) < max_n:
        raise InsufficientDataError(f"insufficient data for n-gram order {max_n}")
    if chunk_size:
        table = count_ngrams_chunked(symbols, max_n, chunk_size, workers)
    else:
        table = count_ngrams(symbols, max_n)
    return _profile_from_table(table, alphabet)


def profile_segments(
    segments: Iterable[Iterable],
    alphabet: Union[Sized, int],
    max_n: int
) -> EntropyProfile:
    """
    H0 and H1..H_max_n with windows confined to each segment (per-sentence windows).
    
    Segments shorter than max_n hold no window and contribute to no order.
    """
    _check_max_n(max_n)
    segments = [as_ids(segment) for segment in segments]
    return _profile_from_table(count_segments(segments, max_n), alphabet)
