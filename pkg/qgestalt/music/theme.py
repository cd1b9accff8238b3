import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from qgestalt.generic.exceptions import InvalidThemeError, QuantizationError

__all__ = ['ThemeEvent', 'AbstractTheme', 'REST', 'MAX_INTERVAL', 'DurationLike']
logger = logging.getLogger(__name__)

REST = None
MAX_INTERVAL = 48

DurationLike = Union[Fraction, int, str]


@dataclass(frozen=True)
class ThemeEvent:
    """
    One event of an abstract theme: a sounding note, given by its interval in semitones
    from the previous sounding note, or a rest (interval REST).

    Attributes
    ----------
    interval : Optional[int]
        Semitones relative to the previous sounding note; None for a rest.
    duration : Fraction
        Positive length in beats.
    """
    interval: Optional[int]
    duration: Fraction

    def __post_init__(self):
        try:
            duration = Fraction(self.duration)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidThemeError(f"bad duration {self.duration!r}: {e}") from e
        if duration <= 0:
            raise InvalidThemeError(f"duration must be positive, got {duration}")
        object.__setattr__(self, 'duration', duration)
        if self.interval is not REST:
            if isinstance(self.interval, bool) or int(self.interval) != self.interval:
                raise InvalidThemeError(f"interval must be a whole number of semitones, got {self.interval!r}")
            if abs(int(self.interval)) > MAX_INTERVAL:
                raise InvalidThemeError(f"interval {self.interval} exceeds {MAX_INTERVAL} semitones")
            object.__setattr__(self, 'interval', int(self.interval))

    @property
    def is_rest(self) -> bool:
        return self.interval is REST

    def ticks(self, grid: int) -> int:
        """
        Length of the event on a grid of `grid` ticks per beat.

        Raises:
            QuantizationError: If the duration is not a whole number of ticks.
        """
        ticks = self.duration * grid
        if ticks.denominator != 1:
            raise QuantizationError(f"duration {self.duration} is not a whole number of ticks at {grid} per beat")
        return int(ticks)

    def __str__(self):
        return f"rest {self.duration}" if self.is_rest else f"note {self.interval} {self.duration}"


@dataclass(frozen=True)
class AbstractTheme:
    """
    A monodic theme abstracted from pitch and timbre: melodic intervals and rests in a meter.

    Attributes
    ----------
    name : str
        A label for reports.
    events : tuple of ThemeEvent
        Score order; at least one sounding note, whose first carries interval 0.
    meter : tuple of int
        (beats per bar, beat unit), e.g. (2, 4).
    """
    name: str
    events: Tuple[ThemeEvent, ...]
    meter: Tuple[int, int] = (4, 4)

    def __post_init__(self):
        object.__setattr__(self, 'events', tuple(self.events))
        object.__setattr__(self, 'meter', tuple(self.meter))
        if len(self.meter) != 2 or any(int(v) != v or v < 1 for v in self.meter):
            raise InvalidThemeError(f"meter must be two positive integers, got {self.meter!r}")
        if not self.events:
            raise InvalidThemeError(f"theme {self.name!r} has no events")
        sounding = [e for e in self.events if not e.is_rest]
        if not sounding:
            raise InvalidThemeError(f"theme {self.name!r} has no sounding note")
        if sounding[0].interval != 0:
            raise InvalidThemeError(f"the first sounding note of {self.name!r} must carry interval 0")

    @classmethod
    def from_pitches(cls, name: str, pitches: Sequence[Optional[int]], durations: Sequence[DurationLike],
                     meter: Tuple[int, int] = (4, 4)) -> 'AbstractTheme':
        """
        Abstract a concrete melody (MIDI pitch numbers, None for rests) into its theme.

        Shifting every pitch by the same amount yields the same theme.
        """
        if len(pitches) != len(durations):
            raise InvalidThemeError(f"{len(pitches)} pitches for {len(durations)} durations")
        events = []
        previous = None
        for pitch, duration in zip(pitches, durations):
            if pitch is None:
                events.append(ThemeEvent(REST, duration))
                continue
            events.append(ThemeEvent(0 if previous is None else pitch - previous, duration))
            previous = pitch
        return cls(name, tuple(events), meter)

    @property
    def sounding_intervals(self) -> Tuple[int, ...]:
        """Intervals of the sounding notes, rests skipped."""
        return tuple(e.interval for e in self.events if not e.is_rest)

    @property
    def total_duration(self) -> Fraction:
        return sum((e.duration for e in self.events), Fraction(0))

    def total_ticks(self, grid: int) -> int:
        return sum(e.ticks(grid) for e in self.events)

    def with_intervals(self, intervals: Sequence[int], name: str = "") -> 'AbstractTheme':
        """Same rhythm and meter, new intervals for the sounding notes in order."""
        replacement = iter(intervals)
        events = tuple(e if e.is_rest else ThemeEvent(next(replacement), e.duration) for e in self.events)
        return AbstractTheme(name or self.name, events, self.meter)

    def __str__(self):
        return f"{self.name} [{self.meter[0]}/{self.meter[1]}] " + ", ".join(str(e) for e in self.events)
