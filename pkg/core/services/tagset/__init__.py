"""Tagset construction and loading.

- build_tagset: Build a closed alphabet from pos/punct names and constituent classes
- load_tagset / parse_tagset: Read a tagset definition file
"""
from core.services.tagset.tagset import Symbol, SymbolKind, Tagset, build_tagset
from core.services.tagset.tagset_loader import load_tagset, parse_tagset

__all__ = ["Symbol", "SymbolKind", "Tagset", "build_tagset", "load_tagset", "parse_tagset"]
