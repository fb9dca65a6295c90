"""Error types and error-to-exit-code handling."""
from core.services.errors.error_handler import (
    EXIT_CHUNKER_FAILURE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    ErrorHandler,
)
from core.services.errors.exceptions import (
    ChunkingError,
    ConfigurationError,
    CorpusFormatError,
    HypertagError,
    InsufficientDataError,
    SchemeError,
)

__all__ = [
    "ErrorHandler",
    "EXIT_OK",
    "EXIT_INPUT_ERROR",
    "EXIT_CHUNKER_FAILURE",
    "HypertagError",
    "ConfigurationError",
    "CorpusFormatError",
    "InsufficientDataError",
    "ChunkingError",
    "SchemeError",
]
