"""Request models for the entropy API."""
from typing import Optional
from pydantic import BaseModel, Field


class AnalyzeRequest(BaseModel):
    """Scheme comparison over a pre-tagged corpus; bundled demo files fill omitted parts."""
    corpus: Optional[str] = Field(None, description="Corpus file contents")
    tagset: Optional[str] = Field(None, description="Tagset definition file contents")
    rules: Optional[str] = Field(None, description="Chunk rules file contents")
    schemes: Optional[str] = Field(None, description="Comma-separated scheme suffixes, e.g. p,a,d,n,s,sn")
    max_n: Optional[int] = Field(None, ge=1, le=8)
    per_sentence_windows: Optional[bool] = None


class LettersRequest(BaseModel):
    """Letter-sequence entropy of a text."""
    text: str = Field(..., min_length=1)
    include_space: bool = True
    max_n: Optional[int] = Field(None, ge=1, le=8)
