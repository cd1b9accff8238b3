import re
from typing import List, Tuple

__all__ = ['escape_regex_special_chars', 'rremove', 'tokens_with_columns']


def escape_regex_special_chars(text: str) -> str:
    """
    Escapes all regular expression special characters in a given string.

    Args:
        text (str): The input string to modify.

    Returns:
        str: The modified string with all regular expression special characters escaped.
    """
    return re.escape(text)


def rremove(text: str, char: str = "#") -> str:
    """
    Removes everything from the first occurrence of a marker character onwards,
    e.g. a trailing comment.

    Args:
        text (str): The input string to modify.
        char (str): The marker. The default value is "#".

    Returns:
        str: The text before the marker; unchanged when the marker is absent.

    Example:
        > rremove("note 0 1/2  # G")
        > 'note 0 1/2  '
    """
    if char in text:
        return re.sub(f"{escape_regex_special_chars(char)}.*", "", text)
    return text


def tokens_with_columns(line: str) -> List[Tuple[int, str]]:
    """
    Split a line on whitespace, keeping the 1-based column each token starts at.

    Example:
        > tokens_with_columns("  rest 1/2")
        > [(3, 'rest'), (8, '1/2')]
    """
    return [(match.start() + 1, match.group(0)) for match in re.finditer(r"\S+", line)]
