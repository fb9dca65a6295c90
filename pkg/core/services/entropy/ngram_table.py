"""N-gram counting over symbol streams."""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Hashable, Iterable, List, Sequence, Tuple

import numpy as np

from core.services.errors.exceptions import ConfigurationError, InsufficientDataError
from core.services.tagset.tagset import Symbol

NGram = Tuple[Hashable, ...]


@dataclass(frozen=True)
class NGramTable:
    """Occurrence counts of every n-gram seen in a stream."""
    n: int
    counts: Counter = field(hash=False)
    total: int = field(init=False)
    
    def __post_init__(self):
        if self.n < 1:
            raise ConfigurationError(f"n-gram order must be >= 1, got {self.n}")
        object.__setattr__(self, "counts", Counter(self.counts))
        for key in self.counts:
            if len(key) != self.n:
                raise ConfigurationError(f"key {key!r} does not have length {self.n}")
        object.__setattr__(self, "total", sum(self.counts.values()))
    
    def __len__(self) -> int:
        return len(self.counts)
    
    def merge(self, other: "NGramTable") -> "NGramTable":
        """Sum the counts of two tables of the same order."""
        if other.n != self.n:
            raise ConfigurationError(f"cannot merge {self.n}-gram and {other.n}-gram tables")
        return NGramTable(n=self.n, counts=self.counts + other.counts)
    
    def context_counts(self) -> Counter:
        """
        Counts of the (n-1)-gram contexts, summed over the final position.
        
        Contexts are never counted from the stream on their own, so the
        context totals equal the n-gram total even at stream edges.
        """
        contexts: Counter = Counter()
        for ngram, count in self.counts.items():
            contexts[ngram[:-1]] += count
        return contexts
    
    def suffix_marginal(self, k: int) -> "NGramTable":
        """
        Counts of the last k positions of every n-gram.
        
        Lower orders taken this way share the n-gram windows, so the
        conditional entropies they give never increase with k.
        """
        if not 1 <= k <= self.n:
            raise ConfigurationError(f"suffix length must be in 1..{self.n}, got {k}")
        if k == self.n:
            return self
        suffixes: Counter = Counter()
        for ngram, count in self.counts.items():
            suffixes[ngram[self.n - k:]] += count
        return NGramTable(n=k, counts=suffixes)
    
    def count_array(self) -> np.ndarray:
        return np.fromiter(self.counts.values(), dtype=np.float64, count=len(self.counts))


def as_ids(stream: Iterable) -> List[Hashable]:
    """Replace tagset symbols by their ids; other items pass through."""
    return [item.id if isinstance(item, Symbol) else item for item in stream]


def _check_order(n: int) -> None:
    if n < 1:
        raise ConfigurationError(f"n-gram order must be >= 1, got {n}")


def _window_counts(stream: Sequence[Hashable], n: int) -> Counter:
    return Counter(zip(*(stream[offset:] for offset in range(n))))


def count_ngrams(stream: Iterable, n: int) -> NGramTable:
    """
    Count every contiguous window of length n.
    
    Args:
        stream: Symbols (or symbol ids) in order
        n: Block length
    
    Returns:
        Table holding exactly len(stream) - n + 1 windows
    
    Raises:
        InsufficientDataError: If the stream is shorter than n
    """
    _check_order(n)
    stream = as_ids(stream)
    if len(stream) < n:
        raise InsufficientDataError(f"insufficient data for n-gram order {n}")
    return NGramTable(n=n, counts=_window_counts(stream, n))


def count_segments(segments: Iterable[Iterable], n: int) -> NGramTable:
    """Count windows inside each segment; no window crosses a segment join."""
    _check_order(n)
    counts: Counter = Counter()
    for segment in segments:
        segment = as_ids(segment)
        if len(segment) >= n:
            counts.update(_window_counts(segment, n))
    if not counts:
        raise InsufficientDataError(f"insufficient data for n-gram order {n}")
    return NGramTable(n=n, counts=counts)


def count_ngrams_chunked(stream: Iterable, n: int, chunk_size: int, workers: int = 1) -> NGramTable:
    """
    Count windows over disjoint chunks of the window index range.
    
    Chunk k owns the windows starting in [k*chunk_size, (k+1)*chunk_size)
    and reads chunk_size + n - 1 symbols, so each window is counted once
    and the merged table equals `count_ngrams(stream, n)`. With workers > 1
    the chunks are counted in separate processes.
    """
    _check_order(n)
    if chunk_size < 1:
        raise ConfigurationError(f"chunk size must be >= 1, got {chunk_size}")
    stream = as_ids(stream)
    if len(stream) < n:
        raise InsufficientDataError(f"insufficient data for n-gram order {n}")
    window_count = len(stream) - n + 1
    slices = [
        stream[start:min(start + chunk_size, window_count) + n - 1]
        for start in range(0, window_count, chunk_size)
    ]
    if workers > 1 and len(slices) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(partial(_window_counts, n=n), slices))
    else:
        partials = [_window_counts(part, n) for part in slices]
    counts: Counter = Counter()
    for chunk_counts in partials:
        counts.update(chunk_counts)
    return NGramTable(n=n, counts=counts)
