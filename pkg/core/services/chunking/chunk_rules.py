"""Tag classes used by the noun-group chunker and the subject locator."""
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Union

from core.services.errors.exceptions import ConfigurationError
from core.services.tagset.tagset import SymbolKind, Tagset
from core.utils.text_utils import iter_directives
from core.utils.logger import logger

# directive name -> ChunkRules field
DIRECTIVES: Dict[str, str] = {
    "modifier": "modifier_tags",
    "noun": "noun_tags",
    "pronoun": "pronoun_tags",
    "finite-verb": "finite_verb_tags",
    "determiner": "determiner_tags",
    "preposition": "preposition_tags",
}


@dataclass(frozen=True)
class ChunkRules:
    """
    Tag names grouped by the role they play in chunking.
    
    A noun group is modifier* noun, or a lone pronoun. Determiners sit
    outside noun groups and only extend the subject leftwards. The
    preposition set is optional; when empty, the first noun group before
    the finite verb is always the subject head.
    """
    modifier_tags: FrozenSet[str] = frozenset()
    noun_tags: FrozenSet[str] = frozenset()
    finite_verb_tags: FrozenSet[str] = frozenset()
    determiner_tags: FrozenSet[str] = frozenset()
    pronoun_tags: FrozenSet[str] = frozenset()
    preposition_tags: FrozenSet[str] = frozenset()
    
    def __post_init__(self):
        for name in DIRECTIVES.values():
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if not self.noun_tags:
            raise ConfigurationError("chunk rules declare no noun tags")
        if not self.finite_verb_tags:
            raise ConfigurationError("chunk rules declare no finite-verb tags")
        nominal = self.noun_tags | self.pronoun_tags
        clash = nominal & self.finite_verb_tags
        if clash:
            raise ConfigurationError(f"tags are both nominal and finite verbs: {sorted(clash)}")
        clash = self.determiner_tags & (nominal | self.modifier_tags)
        if clash:
            raise ConfigurationError(f"determiner tags also inside noun groups: {sorted(clash)}")
    
    @property
    def all_tags(self) -> FrozenSet[str]:
        result: FrozenSet[str] = frozenset()
        for name in DIRECTIVES.values():
            result |= getattr(self, name)
        return result
    
    def validate_against(self, tagset: Tagset) -> None:
        """Every rule tag must be a part-of-speech tag of the tagset."""
        pos_tags = set(tagset.names_of_kind(SymbolKind.POS_TAG))
        unknown = sorted(self.all_tags - pos_tags)
        if unknown:
            raise ConfigurationError(f"chunk rule tags are not part-of-speech tags of the tagset: {unknown}")


def parse_rules(stream: Iterable[str], tagset: Tagset) -> ChunkRules:
    """
    Parse a chunk rules file.
    
    Each line is `<directive> <tag> [<tag> ...]` with directive one of
    modifier, noun, pronoun, finite-verb, determiner, preposition.
    """
    declared: Dict[str, List[str]] = {field_name: [] for field_name in DIRECTIVES.values()}
    for line_number, fields in iter_directives(stream):
        if len(fields) < 2 or fields[0] not in DIRECTIVES:
            raise ConfigurationError(
                f"line {line_number}: expected '<{'|'.join(DIRECTIVES)}> <tag> ...', got {' '.join(fields)!r}"
            )
        declared[DIRECTIVES[fields[0]]].extend(fields[1:])
    rules = ChunkRules(**{name: frozenset(tags) for name, tags in declared.items()})
    rules.validate_against(tagset)
    logger.debug(f"Chunk rules loaded: {len(rules.all_tags)} tags")
    return rules


def load_rules(path: Union[str, Path], tagset: Tagset) -> ChunkRules:
    """Load a chunk rules file."""
    with open(path, encoding="utf-8") as f:
        return parse_rules(f, tagset)
