"""Reader for tagset definition files (`pos`, `punct`, `class` directives)."""
from pathlib import Path
from typing import Dict, Iterable, List, Union

from core.services.errors.exceptions import ConfigurationError
from core.services.tagset.tagset import Tagset, build_tagset
from core.utils.text_utils import iter_directives
from core.utils.logger import logger

DIRECTIVES = ("pos", "punct", "class")


def parse_tagset(stream: Iterable[str]) -> Tagset:
    """
    Parse a tagset definition from an iterable of lines.
    
    Each line is a directive followed by one or more names, e.g.
    `pos DET NOUN` or `class subject`; names keep their file order.
    """
    declared: Dict[str, List[str]] = {directive: [] for directive in DIRECTIVES}
    for line_number, fields in iter_directives(stream):
        if len(fields) < 2 or fields[0] not in declared:
            raise ConfigurationError(
                f"line {line_number}: expected '<pos|punct|class> <name> ...', got {' '.join(fields)!r}"
            )
        declared[fields[0]].extend(fields[1:])
    tagset = build_tagset(declared["pos"], declared["punct"], declared["class"])
    logger.debug(
        f"Tagset built: {len(declared['pos'])} pos, {len(declared['punct'])} punct, "
        f"{len(declared['class'])} classes"
    )
    return tagset


def load_tagset(path: Union[str, Path]) -> Tagset:
    """Load a tagset definition file."""
    with open(path, encoding="utf-8") as f:
        return parse_tagset(f)
