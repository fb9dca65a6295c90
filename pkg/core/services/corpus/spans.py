"""Labeled spans, annotations and boundary ordering for bracket insertion."""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Span:
    """Half-open [start, end) range of token positions labeled with a constituent class."""
    constituent: str
    start: int
    end: int
    
    @property
    def is_empty(self) -> bool:
        return self.start == self.end
    
    @property
    def length(self) -> int:
        return self.end - self.start
    
    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end
    
    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end
    
    def crosses(self, other: "Span") -> bool:
        """Partial overlap: neither span contains the other."""
        return self.overlaps(other) and not self.contains(other) and not other.contains(self)


def _canonical(spans: Iterable[Span]) -> Tuple[Span, ...]:
    return tuple(sorted(spans, key=lambda s: (s.start, -s.end, s.constituent)))


@dataclass(frozen=True)
class Annotation:
    """
    Constituent spans over one raw sentence.
    
    `covered` names the classes this annotation speaks for: a covered
    class with no spans means "none in this sentence", an uncovered class
    means "not annotated".
    """
    spans: Tuple[Span, ...] = ()
    covered: FrozenSet[str] = frozenset()
    
    def __post_init__(self):
        object.__setattr__(self, "spans", _canonical(self.spans))
        object.__setattr__(self, "covered", frozenset(self.covered) | {s.constituent for s in self.spans})
    
    def spans_of(self, constituent: str) -> List[Span]:
        return [span for span in self.spans if span.constituent == constituent]
    
    def covers(self, constituent: str) -> bool:
        return constituent in self.covered
    
    def merged(self, other: "Annotation") -> "Annotation":
        return Annotation(spans=self.spans + other.spans, covered=self.covered | other.covered)


def annotation_violation(spans: Sequence[Span], length: int) -> Optional[str]:
    """
    Check the annotation invariants against a sentence length.
    
    Returns:
        Description of the first violation, or None when the spans are valid
    """
    for span in spans:
        if not 0 <= span.start < span.end <= length:
            return f"span {span.constituent} ({span.start},{span.end}) outside sentence of length {length}"
    ordered = _canonical(spans)
    for i, first in enumerate(ordered):
        for second in ordered[i + 1:]:
            if second.start >= first.end:
                break
            if first.constituent == second.constituent:
                return f"spans of class {first.constituent} overlap at {second.start}"
            if first.crosses(second):
                return f"spans {first.constituent} and {second.constituent} cross at {second.start}"
    return None


def boundary_events(
    spans: Sequence[Span],
    length: int,
    rank: Optional[Mapping[str, int]] = None
) -> List[List[Tuple[bool, Span]]]:
    """
    Order bracket boundaries for insertion between tokens.
    
    Position p (0..length) lists the (is_open, span) events emitted
    before token p. Closes come first, innermost first; then empty spans
    as an open/close pair; then opens, outermost first. Spans with equal
    extent nest by `rank`, lower rank outside.
    """
    rank = rank or {}
    events: List[List[Tuple[bool, Span]]] = [[] for _ in range(length + 1)]
    for position in range(length + 1):
        closing = [s for s in spans if s.end == position and not s.is_empty]
        closing.sort(key=lambda s: (-s.start, -rank.get(s.constituent, 0)))
        events[position].extend((False, s) for s in closing)
        for span in spans:
            if span.is_empty and span.start == position:
                events[position].extend([(True, span), (False, span)])
        opening = [s for s in spans if s.start == position and not s.is_empty]
        opening.sort(key=lambda s: (-s.end, rank.get(s.constituent, 0)))
        events[position].extend((True, s) for s in opening)
    return events
