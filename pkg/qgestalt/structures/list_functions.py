from typing import Iterable, List, Tuple

from .str_functions import rremove

__all__ = ['remove_empty_lines', 'numbered_content_lines']


def remove_empty_lines(lines: Iterable[Tuple[int, str]]) -> List[Tuple[int, str]]:
    """Drop numbered lines that hold nothing but whitespace.

    Args:
        lines: (line number, text) pairs.

    Returns:
        List of the pairs whose text is not blank, in order.
    """
    return [(number, line) for number, line in lines if line.strip()]


def numbered_content_lines(text: str, comment: str = "#") -> List[Tuple[int, str]]:
    """
    Number the lines of a text from 1, strip comments and trailing whitespace, and drop
    lines left empty. Leading whitespace is kept so columns stay true to the source.

    Example:
        > numbered_content_lines("meter 2/4\\n# incipit\\n\\nrest 1/2\\n")
        > [(1, 'meter 2/4'), (4, 'rest 1/2')]
    """
    stripped = [(number, rremove(line, comment).rstrip())
                for number, line in enumerate(text.splitlines(), 1)]
    return remove_empty_lines(stripped)
