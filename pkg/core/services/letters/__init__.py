"""Letter-sequence entropy with and without the word space."""
from core.services.letters.letters import (
    LETTERS,
    SPACE,
    LetterStream,
    letter_profile,
    letter_tagset,
    normalize_text,
)

__all__ = ["LETTERS", "SPACE", "LetterStream", "letter_profile", "letter_tagset", "normalize_text"]
