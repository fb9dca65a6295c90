"""Scheme comparison report models."""
import math
from typing import Dict, List

from pydantic import BaseModel, Field, model_validator

from core.models.stats import CorpusStats

PLAIN_SUFFIX = "p"


class SchemeRow(BaseModel):
    """Entropies of one scheme and their differences from the plain row."""
    scheme: str  # suffix: p, a, d, n, s, sn
    label: str  # text-<suffix>
    values: Dict[int, float]  # n -> H_n in bits
    deltas: Dict[int, float] = Field(default_factory=dict)  # n -> H_n - H_n(plain)


class ReportMetadata(BaseModel):
    corpus: CorpusStats
    h0: float
    max_n: int
    excluded_count: int = 0  # sentences the chunker could not analyse
    per_sentence_windows: bool = False
    annotation_sources: Dict[str, str] = Field(default_factory=dict)  # class -> gold | chunker


class SchemeReport(BaseModel):
    """Per-scheme rows in fixed scheme order, plain first."""
    rows: List[SchemeRow]
    metadata: ReportMetadata
    
    @model_validator(mode="after")
    def check_rows(self) -> "SchemeReport":
        plain = [row for row in self.rows if row.scheme == PLAIN_SUFFIX]
        if len(plain) != 1:
            raise ValueError(f"report needs exactly one plain row, found {len(plain)}")
        orders = set(range(1, self.metadata.max_n + 1))
        for row in self.rows:
            if set(row.values) != orders or set(row.deltas) != orders:
                raise ValueError(f"row {row.label} does not cover n = 1..{self.metadata.max_n}")
            for value in list(row.values.values()) + list(row.deltas.values()):
                if not math.isfinite(value):
                    raise ValueError(f"row {row.label} has a non-finite value")
        if any(delta != 0.0 for delta in plain[0].deltas.values()):
            raise ValueError("plain row deltas must be zero")
        return self
    
    @property
    def baseline(self) -> SchemeRow:
        return next(row for row in self.rows if row.scheme == PLAIN_SUFFIX)
    
    def row(self, scheme: str) -> SchemeRow:
        for row in self.rows:
            if row.scheme == scheme:
                return row
        raise KeyError(scheme)
    
    def value(self, scheme: str, n: int) -> float:
        return self.row(scheme).values[n]
