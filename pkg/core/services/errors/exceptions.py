"""Exception hierarchy for the hypertag entropy toolkit."""
from typing import Optional


class HypertagError(Exception):
    """Base class for every error raised by the toolkit."""


class ConfigurationError(HypertagError):
    """Invalid tagset, chunk rules or scheme bindings."""


class CorpusFormatError(HypertagError):
    """Malformed corpus input, reported with its line and offending token."""
    
    def __init__(self, message: str, line_number: Optional[int] = None, token: Optional[str] = None):
        self.line_number = line_number
        self.token = token
        location = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{location}{message}")


class InsufficientDataError(HypertagError):
    """Not enough symbols to compute the requested statistic."""


class ChunkingError(HypertagError):
    """The automatic chunker could not analyse a sentence."""


class SchemeError(HypertagError):
    """A scheme could not be applied to a sentence."""
