"""Closed symbol alphabet: part-of-speech tags, punctuation tags and hypertag pairs."""
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.services.errors.exceptions import ConfigurationError

# Symbol names end up inside nltk tag patterns, so keep them regex-inert.
_NAME_PATTERN = re.compile(r"^[A-Za-z0-9_\-]+$")


class SymbolKind(str, Enum):
    POS_TAG = "pos-tag"
    PUNCT_TAG = "punctuation-tag"
    HYPERTAG_OPEN = "hypertag-open"
    HYPERTAG_CLOSE = "hypertag-close"


@dataclass(frozen=True)
class Symbol:
    """One member of a tagset."""
    id: int
    name: str
    kind: SymbolKind
    constituent: Optional[str] = None  # class name, hypertags only
    
    @property
    def is_hypertag(self) -> bool:
        return self.kind in (SymbolKind.HYPERTAG_OPEN, SymbolKind.HYPERTAG_CLOSE)


def open_name(constituent: str) -> str:
    return "{" + constituent


def close_name(constituent: str) -> str:
    return constituent + "}"


@dataclass(frozen=True)
class Tagset:
    """Immutable alphabet with declaration-order symbol ids."""
    symbols: Tuple[Symbol, ...]
    hypertag_pairs: Mapping[str, Tuple[str, str]] = field(hash=False, compare=True)
    _by_name: Dict[str, Symbol] = field(init=False, repr=False, compare=False, hash=False)
    
    def __post_init__(self):
        by_name: Dict[str, Symbol] = {}
        for index, symbol in enumerate(self.symbols):
            if symbol.id != index:
                raise ConfigurationError(f"symbol {symbol.name} has id {symbol.id}, expected {index}")
            if symbol.name in by_name:
                raise ConfigurationError(f"duplicate name {symbol.name}")
            by_name[symbol.name] = symbol
        if len(self.symbols) < 2:
            raise ConfigurationError("a tagset needs at least 2 symbols")
        for constituent, (opener, closer) in self.hypertag_pairs.items():
            if opener not in by_name or closer not in by_name:
                raise ConfigurationError(f"hypertags of class {constituent} are not tagset members")
        object.__setattr__(self, "_by_name", by_name)
    
    def __len__(self) -> int:
        return len(self.symbols)
    
    def __contains__(self, name: object) -> bool:
        return name in self._by_name
    
    @property
    def size(self) -> int:
        return len(self.symbols)
    
    @property
    def classes(self) -> List[str]:
        """Constituent classes in declaration order."""
        return list(self.hypertag_pairs)
    
    @property
    def names(self) -> List[str]:
        return [symbol.name for symbol in self.symbols]
    
    def symbol(self, name: str) -> Symbol:
        try:
            return self._by_name[name]
        except KeyError:
            raise ConfigurationError(f"unknown symbol {name}") from None
    
    def get(self, name: str) -> Optional[Symbol]:
        return self._by_name.get(name)
    
    def id_of(self, name: str) -> int:
        return self.symbol(name).id
    
    def name_of(self, symbol_id: int) -> str:
        return self.symbols[symbol_id].name
    
    def names_of_kind(self, kind: SymbolKind) -> List[str]:
        return [symbol.name for symbol in self.symbols if symbol.kind == kind]
    
    def open_symbol(self, constituent: str) -> Symbol:
        return self.symbol(self._pair(constituent)[0])
    
    def close_symbol(self, constituent: str) -> Symbol:
        return self.symbol(self._pair(constituent)[1])
    
    def _pair(self, constituent: str) -> Tuple[str, str]:
        try:
            return self.hypertag_pairs[constituent]
        except KeyError:
            raise ConfigurationError(f"tagset has no hypertag pair for class {constituent}") from None


def _check_names(names: Sequence[str], what: str) -> None:
    seen = set()
    for name in names:
        if not name or not _NAME_PATTERN.match(name):
            raise ConfigurationError(f"invalid {what} name {name!r}")
        if name in seen:
            raise ConfigurationError(f"duplicate {what} {name}")
        seen.add(name)


def build_tagset(
    pos_names: Iterable[str],
    punct_names: Iterable[str],
    classes: Iterable[str]
) -> Tagset:
    """
    Build a tagset from its declarations.
    
    Ids follow declaration order: part-of-speech tags, then punctuation
    tags, then an (open, close) hypertag pair per constituent class.
    
    Args:
        pos_names: Part-of-speech tag names
        punct_names: Punctuation tag names
        classes: Constituent class names
    
    Returns:
        Tagset with |pos| + |punct| + 2*|classes| symbols
    
    Raises:
        ConfigurationError: On an invalid or duplicate name
    """
    pos_names = list(pos_names)
    punct_names = list(punct_names)
    classes = list(classes)
    _check_names(classes, "class")
    
    declared: List[Tuple[str, SymbolKind, Optional[str]]] = []
    declared.extend((name, SymbolKind.POS_TAG, None) for name in pos_names)
    declared.extend((name, SymbolKind.PUNCT_TAG, None) for name in punct_names)
    pairs: Dict[str, Tuple[str, str]] = {}
    for constituent in classes:
        pairs[constituent] = (open_name(constituent), close_name(constituent))
        declared.append((open_name(constituent), SymbolKind.HYPERTAG_OPEN, constituent))
        declared.append((close_name(constituent), SymbolKind.HYPERTAG_CLOSE, constituent))
    
    _check_names(pos_names + punct_names, "name")
    names = [name for name, _, _ in declared]
    if len(set(names)) != len(names):
        duplicate = next(name for name in names if names.count(name) > 1)
        raise ConfigurationError(f"duplicate name {duplicate}")
    
    symbols = tuple(
        Symbol(id=index, name=name, kind=kind, constituent=constituent)
        for index, (name, kind, constituent) in enumerate(declared)
    )
    return Tagset(symbols=symbols, hypertag_pairs=pairs)
