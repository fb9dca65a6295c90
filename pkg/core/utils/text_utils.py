"""Text processing utilities."""
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple, Union

COMMENT_PREFIX = "#"


def iter_content_lines(stream: Iterable[str]) -> Iterator[Tuple[int, str]]:
    """
    Yield (line_number, stripped_line) for every non-blank, non-comment line.
    
    Line numbers are 1-based and count every physical line, so error
    messages point at the right place in the source file.
    """
    for line_number, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        yield line_number, line


def iter_directives(stream: Iterable[str]) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line_number, whitespace-split fields) for directive files."""
    for line_number, line in iter_content_lines(stream):
        yield line_number, line.split()


def read_text(source: Union[str, Path]) -> str:
    """Read a UTF-8 text file."""
    return Path(source).read_text(encoding="utf-8")

