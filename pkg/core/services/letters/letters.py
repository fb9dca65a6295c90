"""Letter-sequence entropy over 26-letter and 27-letter (with space) alphabets."""
import re
import string
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Tuple

from core.models.entropy import EntropyProfile
from core.services.entropy.entropy_service import profile
from core.services.errors.exceptions import InsufficientDataError
from core.services.tagset.tagset import Tagset, build_tagset
from core.utils.logger import logger

LETTERS = tuple(string.ascii_uppercase)
SPACE = "SPACE"

_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class LetterStream:
    """Normalized letters, plus counts of what normalization dropped."""
    symbols: Tuple[str, ...]
    include_space: bool
    dropped: Dict[str, int] = field(default_factory=dict, hash=False)
    
    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        alphabet = set(LETTERS) | ({SPACE} if self.include_space else set())
        for index, symbol in enumerate(self.symbols):
            if symbol not in alphabet:
                raise ValueError(f"symbol {symbol!r} at {index} is outside the alphabet")
            if symbol == SPACE and index and self.symbols[index - 1] == SPACE:
                raise ValueError(f"consecutive spaces at {index}")
    
    def __len__(self) -> int:
        return len(self.symbols)
    
    @property
    def alphabet_size(self) -> int:
        return len(LETTERS) + (1 if self.include_space else 0)
    
    def as_text(self) -> str:
        return "".join(" " if symbol == SPACE else symbol for symbol in self.symbols)


def _drop_category(char: str) -> str:
    if char.isdigit():
        return "digit"
    category = unicodedata.category(char)
    if category == "Mn":
        return "accent"
    if category.startswith("P") or category.startswith("S"):
        return "punctuation"
    return "other"


def normalize_text(raw: str, include_space: bool = True) -> LetterStream:
    """
    Reduce raw text to upper-case ASCII letters and, optionally, single spaces.
    
    Accents are stripped (é becomes E); digits, punctuation and any other
    character are dropped. With `include_space`, each whitespace run
    becomes one SPACE and the edges are trimmed; without it, whitespace
    is deleted.
    
    Raises:
        InsufficientDataError: If no letter survives
    """
    dropped: Counter = Counter()
    kept = []
    for char in unicodedata.normalize("NFD", raw):
        if char in string.ascii_letters:
            kept.append(char.upper())
        elif char.isspace():
            kept.append(" ")
        else:
            dropped[_drop_category(char)] += 1
    text = "".join(kept)
    if include_space:
        text = _WHITESPACE.sub(" ", text).strip()
    else:
        text = _WHITESPACE.sub("", text)
    if not text:
        raise InsufficientDataError("no alphabetic content")
    symbols = tuple(SPACE if char == " " else char for char in text)
    return LetterStream(symbols=symbols, include_space=include_space, dropped=dict(dropped))


@lru_cache(maxsize=2)
def letter_tagset(include_space: bool) -> Tagset:
    """A..Z as part-of-speech symbols, SPACE as the one punctuation symbol."""
    return build_tagset(LETTERS, [SPACE] if include_space else [], [])


def letter_profile(stream: LetterStream, max_n: int) -> EntropyProfile:
    """H0..H_max_n of a letter stream over its own alphabet."""
    tagset = letter_tagset(stream.include_space)
    ids = [tagset.id_of(symbol) for symbol in stream.symbols]
    result = profile(ids, tagset, max_n)
    logger.info(
        f"Letter profile: {len(stream)} symbols, {stream.alphabet_size}-letter alphabet, "
        f"h0={result.h0:.3f}"
    )
    return result
