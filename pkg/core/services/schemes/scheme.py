"""The six hypertag insertion schemes and their class bindings."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from core.services.chunking.chunker import NOUN_GROUP, SUBJECT
from core.services.errors.exceptions import ConfigurationError
from core.services.tagset.tagset import Tagset

# Roles a scheme can emit brackets for
ROLE_ARBITRARY = "arbitrary"
ROLE_DETERMINER = "determiner"
ROLE_NOUN_GROUP = "noun_group"
ROLE_SUBJECT = "subject"

# Outermost first when two spans have the same extent
ROLE_NESTING = (ROLE_SUBJECT, ROLE_NOUN_GROUP, ROLE_ARBITRARY, ROLE_DETERMINER)

# Roles whose spans come from an annotation rather than from the tags
ANNOTATED_ROLES = (ROLE_NOUN_GROUP, ROLE_SUBJECT)


class SchemeKind(str, Enum):
    """Scheme identifiers; the value is the report suffix."""
    PLAIN = "p"
    ARBITRARY = "a"
    DETERMINER = "d"
    NOUN_GROUP = "n"
    SUBJECT = "s"
    SUBJECT_AND_NOUN_GROUP = "sn"
    
    @property
    def suffix(self) -> str:
        return self.value
    
    @property
    def label(self) -> str:
        return f"text-{self.value}"
    
    @property
    def roles(self) -> Tuple[str, ...]:
        return _ROLES[self]
    
    @property
    def order(self) -> int:
        return SCHEME_ORDER.index(self)


_ROLES: Dict[SchemeKind, Tuple[str, ...]] = {
    SchemeKind.PLAIN: (),
    SchemeKind.ARBITRARY: (ROLE_ARBITRARY,),
    SchemeKind.DETERMINER: (ROLE_DETERMINER,),
    SchemeKind.NOUN_GROUP: (ROLE_NOUN_GROUP,),
    SchemeKind.SUBJECT: (ROLE_SUBJECT,),
    SchemeKind.SUBJECT_AND_NOUN_GROUP: (ROLE_SUBJECT, ROLE_NOUN_GROUP),
}

SCHEME_ORDER: List[SchemeKind] = list(SchemeKind)


def parse_scheme_list(value: Iterable[str]) -> List[SchemeKind]:
    """
    Turn suffixes ("p", "sn", ...) into scheme kinds in report order.
    
    Accepts a comma-separated string or an iterable of suffixes. Plain is
    always included; duplicates collapse.
    """
    if isinstance(value, str):
        value = value.split(",")
    kinds = {SchemeKind.PLAIN}
    for item in value:
        item = item.strip()
        if not item:
            continue
        try:
            kinds.add(SchemeKind(item))
        except ValueError:
            known = ", ".join(kind.value for kind in SCHEME_ORDER)
            raise ConfigurationError(f"unknown scheme {item!r} (expected one of {known})") from None
    return sorted(kinds, key=lambda kind: kind.order)


def default_bindings(tagset: Tagset) -> Dict[str, str]:
    """
    Role -> constituent class defaults.
    
    Arbitrary and determiner brackets reuse the first declared class
    pair; noun groups and subjects bind to their own classes.
    """
    bindings = {ROLE_NOUN_GROUP: NOUN_GROUP, ROLE_SUBJECT: SUBJECT}
    if tagset.classes:
        bindings[ROLE_ARBITRARY] = tagset.classes[0]
        bindings[ROLE_DETERMINER] = tagset.classes[0]
    return bindings


@dataclass(frozen=True)
class Scheme:
    """A scheme kind with its roles bound to tagset hypertag pairs."""
    kind: SchemeKind
    bindings: Mapping[str, str] = field(default_factory=dict, hash=False)
    determiner_tags: FrozenSet[str] = frozenset()
    
    @property
    def label(self) -> str:
        return self.kind.label
    
    def class_of(self, role: str) -> str:
        return self.bindings[role]
    
    @property
    def rank(self) -> Dict[str, int]:
        """Nesting rank per bound class, lower is outer."""
        return {self.bindings[role]: ROLE_NESTING.index(role) for role in self.kind.roles}
    
    @classmethod
    def for_tagset(
        cls,
        kind: SchemeKind,
        tagset: Tagset,
        determiner_tags: Iterable[str] = (),
        bindings: Optional[Mapping[str, str]] = None
    ) -> "Scheme":
        """
        Bind a scheme to a tagset.
        
        Args:
            kind: Scheme to bind
            tagset: Tagset providing the hypertag pairs
            determiner_tags: Tags wrapped by the determiner scheme
            bindings: Role -> class overrides (e.g. {"subject": "clause"})
        
        Raises:
            ConfigurationError: If a role has no hypertag pair, or two roles share one
        """
        resolved = default_bindings(tagset)
        resolved.update(bindings or {})
        used: Dict[str, str] = {}
        for role in kind.roles:
            constituent = resolved.get(role)
            if constituent is None or constituent not in tagset.hypertag_pairs:
                raise ConfigurationError(
                    f"scheme {kind.label}: tagset has no hypertag pair for {role} (class {constituent})"
                )
            if constituent in used.values():
                raise ConfigurationError(f"scheme {kind.label}: class {constituent} bound to two roles")
            used[role] = constituent
        determiners = frozenset(determiner_tags)
        if kind == SchemeKind.DETERMINER and not determiners:
            raise ConfigurationError(f"scheme {kind.label}: no determiner tags declared")
        return cls(kind=kind, bindings=used, determiner_tags=determiners)
