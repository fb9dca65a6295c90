"""Hypertag insertion schemes p, a, d, n, s and sn, plus bracket validation."""
from core.services.schemes.brackets import BracketViolation, validate_brackets
from core.services.schemes.hypertagger import apply_scheme, arbitrary_span, scheme_spans
from core.services.schemes.scheme import (
    SCHEME_ORDER,
    Scheme,
    SchemeKind,
    default_bindings,
    parse_scheme_list,
)

__all__ = [
    "BracketViolation",
    "validate_brackets",
    "apply_scheme",
    "arbitrary_span",
    "scheme_spans",
    "SCHEME_ORDER",
    "Scheme",
    "SchemeKind",
    "default_bindings",
    "parse_scheme_list",
]
