"""
Theme files.

A theme file is line oriented; `#` starts a comment::

    meter 2/4
    rest 1/2
    note 0 1/2
    note -4 2

The `meter` header comes first. Each later line is `note <interval> <duration>` or
`rest <duration>`, durations being `n` or `n/d` beats. Only monodic themes are accepted.
"""
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple

from qgestalt.files.file_actions import FileActions
from qgestalt.generic.exceptions import InvalidThemeError, ThemeSyntaxError
from qgestalt.structures import numbered_content_lines, tokens_with_columns
from .theme import MAX_INTERVAL, REST, AbstractTheme, ThemeEvent

__all__ = ['parse_theme', 'load_theme']
logger = logging.getLogger(__name__)

_DURATION = re.compile(r"^(\d+)(?:/(\d+))?$")
_INTERVAL = re.compile(r"^[+-]?\d+$")
_POLYPHONIC = {'chord', 'voice', 'voices', 'dyad'}


def _duration(token: str, line: int, column: int) -> Fraction:
    match = _DURATION.match(token)
    if not match:
        raise ThemeSyntaxError(f"malformed duration {token!r}; expected n or n/d", line, column)
    numerator, denominator = int(match.group(1)), int(match.group(2) or 1)
    if denominator == 0:
        raise ThemeSyntaxError(f"zero denominator in duration {token!r}", line, column)
    if numerator == 0:
        raise ThemeSyntaxError(f"non-positive duration {token!r}", line, column)
    return Fraction(numerator, denominator)


def _meter(tokens: List[Tuple[int, str]], line: int) -> Tuple[int, int]:
    if len(tokens) != 2:
        raise ThemeSyntaxError("expected 'meter <beats>/<unit>'", line, tokens[0][0])
    column, token = tokens[1]
    match = re.match(r"^(\d+)/(\d+)$", token)
    if not match or int(match.group(1)) < 1 or int(match.group(2)) < 1:
        raise ThemeSyntaxError(f"malformed meter {token!r}", line, column)
    return int(match.group(1)), int(match.group(2))


def parse_theme(text: str, name: str = "theme") -> AbstractTheme:
    """
    Parse theme-file content into an AbstractTheme.

    Args:
        text (str): The file content.
        name (str): Label for the theme, usually the file stem.

    Returns:
        AbstractTheme: Events in score order, meter captured.

    Raises:
        ThemeSyntaxError: With line and column, on any malformed or polyphonic input,
            a missing meter, zero events or a non-positive duration.
    """
    lines = numbered_content_lines(text)
    if not lines:
        raise ThemeSyntaxError("empty theme file; expected a 'meter' header", 1, 1)

    meter = None
    events: List[ThemeEvent] = []
    sounded = False
    for number, content in lines:
        tokens = tokens_with_columns(content)
        column, keyword = tokens[0]
        keyword = keyword.lower()
        if meter is None:
            if keyword != 'meter':
                raise ThemeSyntaxError(f"expected 'meter' header, found {keyword!r}", number, column)
            meter = _meter(tokens, number)
            continue
        if keyword == 'meter':
            raise ThemeSyntaxError("meter changes are not supported", number, column)
        if keyword in _POLYPHONIC:
            raise ThemeSyntaxError("polyphonic themes are not supported; use one voice", number, column)
        if keyword == 'rest':
            if len(tokens) != 2:
                raise ThemeSyntaxError("expected 'rest <duration>'", number, column)
            events.append(ThemeEvent(REST, _duration(tokens[1][1], number, tokens[1][0])))
        elif keyword == 'note':
            if len(tokens) != 3:
                raise ThemeSyntaxError("expected 'note <interval> <duration>'", number, column)
            interval_column, interval_token = tokens[1]
            if not _INTERVAL.match(interval_token):
                raise ThemeSyntaxError(f"malformed interval {interval_token!r}", number, interval_column)
            interval = int(interval_token)
            if abs(interval) > MAX_INTERVAL:
                raise ThemeSyntaxError(f"interval {interval} exceeds {MAX_INTERVAL} semitones", number, interval_column)
            if not sounded and interval != 0:
                raise ThemeSyntaxError("the first sounding note must carry interval 0", number, interval_column)
            sounded = True
            events.append(ThemeEvent(interval, _duration(tokens[2][1], number, tokens[2][0])))
        else:
            raise ThemeSyntaxError(f"unknown directive {keyword!r}", number, column)

    last_line = lines[-1][0]
    if not events:
        raise ThemeSyntaxError("theme has no events", last_line, 1)
    if not sounded:
        raise ThemeSyntaxError("theme has no sounding note", last_line, 1)
    try:
        theme = AbstractTheme(name, tuple(events), meter)
    except InvalidThemeError as e:
        raise ThemeSyntaxError(e.message, last_line, 1) from e
    logger.debug(f"parsed theme {theme}")
    return theme


def load_theme(path: str) -> AbstractTheme:
    """
    Read and parse a theme file; the theme is named after the file stem.

    Raises:
        FileNotFoundError: If the file does not exist.
        ThemeSyntaxError: As parse_theme.
    """
    return parse_theme(FileActions.read_text(path), name=Path(path).stem)
