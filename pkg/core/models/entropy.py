"""Entropy profile model."""
from typing import Dict
from pydantic import BaseModel, Field


class EntropyProfile(BaseModel):
    """H0 and the n-gram conditional entropies H1..Hmax, in bits per symbol."""
    h0: float
    hn: Dict[int, float] = Field(default_factory=dict)
    
    @property
    def max_n(self) -> int:
        return max(self.hn) if self.hn else 0
    
    def value(self, n: int) -> float:
        """H_n for n >= 1, H0 for n == 0."""
        return self.h0 if n == 0 else self.hn[n]
