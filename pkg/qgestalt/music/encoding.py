import logging
from dataclasses import dataclass, replace
from typing import Iterable, Optional

import numpy as np

from qgestalt.generic.exceptions import EncodingLengthError, QuantizationError
from qgestalt.qstate.encoding import amplitude_encode
from qgestalt.qstate.states import PureState
from .theme import AbstractTheme

__all__ = ['EncodingConfig', 'MusicalIdeaState', 'encode_melodic', 'encode_rhythmic', 'onset_pattern',
           'encode_theme', 'corpus_span', 'DEFAULT_MELODIC_LEN', 'DEFAULT_GRID']
logger = logging.getLogger(__name__)

DEFAULT_MELODIC_LEN = 16
DEFAULT_GRID = 4


@dataclass(frozen=True)
class EncodingConfig:
    """
    Channel dimensions for musical ideas.

    Attributes
    ----------
    melodic_len : int
        Length L the interval sequence is zero-padded to.
    grid : int
        Ticks per beat of the rhythm grid.
    span : Optional[int]
        Total ticks of the rhythm channel; None until resolved against a corpus.
    """
    melodic_len: int = DEFAULT_MELODIC_LEN
    grid: int = DEFAULT_GRID
    span: Optional[int] = None

    def resolved(self, themes: Iterable[AbstractTheme]) -> 'EncodingConfig':
        """This config with span set to the longest theme's tick count when unset."""
        if self.span is not None:
            return self
        return replace(self, span=corpus_span(themes, self.grid))


def corpus_span(themes: Iterable[AbstractTheme], grid: int) -> int:
    """Maximum total ticks over the themes."""
    totals = [t.total_ticks(grid) for t in themes]
    if not totals:
        raise EncodingLengthError("cannot size the rhythm channel from an empty corpus")
    return max(totals)


def encode_melodic(t: AbstractTheme, length: int = DEFAULT_MELODIC_LEN) -> PureState:
    """
    Encode the sounding intervals of a theme, zero-padded to `length`, as a pure state.

    The channel carries intervals only, so it is invariant under transposition.

    Raises:
        EncodingLengthError: If the theme has more sounding notes than `length`.
    """
    intervals = t.sounding_intervals
    if length < len(intervals):
        raise EncodingLengthError(f"{t.name!r} has {len(intervals)} sounding notes; melodic length {length} is too small")
    padded = np.zeros(length)
    padded[:len(intervals)] = intervals
    return amplitude_encode(padded)


def onset_pattern(t: AbstractTheme, grid: int, span: int) -> np.ndarray:
    """
    Onset indicators on the tick grid: 1 where a sounding note starts, 0 elsewhere.

    Raises:
        QuantizationError: If grid < 1 or a duration does not fall on the grid.
        EncodingLengthError: If the theme is longer than `span` ticks.
    """
    if grid < 1:
        raise QuantizationError(f"grid must be at least 1 tick per beat, got {grid}")
    ticks = [e.ticks(grid) for e in t.events]
    total = sum(ticks)
    if span < total:
        raise EncodingLengthError(f"{t.name!r} lasts {total} ticks; rhythm span {span} is too small")
    pattern = np.zeros(span)
    onset = 0
    for event, length in zip(t.events, ticks):
        if not event.is_rest:
            pattern[onset] = 1.0
        onset += length
    return pattern


def encode_rhythmic(t: AbstractTheme, grid: int = DEFAULT_GRID, span: Optional[int] = None) -> PureState:
    """
    Encode the onset pattern of a theme as a pure state; pitch plays no part.

    Args:
        grid (int): Ticks per beat.
        span (int): Total ticks; defaults to the theme's own length.
    """
    if span is None:
        span = t.total_ticks(grid)
    return amplitude_encode(onset_pattern(t, grid, span))


@dataclass(frozen=True, eq=False)
class MusicalIdeaState:
    """
    A pure musical idea seen through its two channels.

    Attributes
    ----------
    melodic : PureState
        Encoded interval channel.
    rhythmic : PureState
        Encoded onset channel.
    name : str
        Label for reports.
    """
    melodic: PureState
    rhythmic: PureState
    name: str = ""

    def is_close(self, other: 'MusicalIdeaState') -> bool:
        return self.melodic.is_close(other.melodic) and self.rhythmic.is_close(other.rhythmic)

    def __repr__(self):
        return (f"MusicalIdeaState({self.name!r}, melodic_dim={self.melodic.dimension}, "
                f"rhythmic_dim={self.rhythmic.dimension})")


def encode_theme(t: AbstractTheme, config: EncodingConfig = EncodingConfig()) -> MusicalIdeaState:
    """Encode both channels of a theme under one configuration."""
    return MusicalIdeaState(encode_melodic(t, config.melodic_len),
                            encode_rhythmic(t, config.grid, config.span),
                            t.name)
