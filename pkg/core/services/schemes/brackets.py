"""Well-formedness check for hypertagged sentences."""
from dataclasses import dataclass
from typing import List, Optional

from core.services.corpus.corpus import TaggedSentence
from core.services.tagset.tagset import SymbolKind


@dataclass(frozen=True)
class BracketViolation:
    index: int  # position of the offending symbol, or sentence length when a bracket is left open
    message: str
    
    def __str__(self) -> str:
        return f"at {self.index}: {self.message}"


def validate_brackets(sentence: TaggedSentence) -> Optional[BracketViolation]:
    """
    Check that hypertags pair up and nest.
    
    Returns:
        The first violation found, or None when the sentence is well formed
    """
    open_stack: List[str] = []
    for index, symbol in enumerate(sentence.tags):
        if symbol.kind == SymbolKind.HYPERTAG_OPEN:
            open_stack.append(symbol.constituent)
        elif symbol.kind == SymbolKind.HYPERTAG_CLOSE:
            if not open_stack:
                return BracketViolation(index, f"{symbol.name} closes nothing")
            if open_stack[-1] != symbol.constituent:
                if symbol.constituent in open_stack:
                    return BracketViolation(
                        index, f"{symbol.name} crosses the open {open_stack[-1]} bracket"
                    )
                return BracketViolation(index, f"{symbol.name} has no matching open bracket")
            open_stack.pop()
    if open_stack:
        return BracketViolation(len(sentence), f"{open_stack[-1]} bracket never closed")
    return None
