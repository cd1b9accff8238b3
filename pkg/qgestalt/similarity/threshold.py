import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Union

from qgestalt.generic.exceptions import InvalidThresholdError

__all__ = ['SimilarityThreshold', 'ThresholdLike', 'DEFAULT_THRESHOLD', 'DEFAULT_DEGREES',
           'SIMILARITY_TOL', 'similarity_degree']
logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.9
# a fidelity this close below r still counts as reaching r
SIMILARITY_TOL = 1e-12

# "highly similar" is anchored at r* = 0.9; the other two degrees are local choices
DEFAULT_DEGREES = {'highly': 0.9, 'somewhat': 0.7, 'slightly': 0.55}


@dataclass(frozen=True)
class SimilarityThreshold:
    """
    A similarity threshold r in [0, 1]. Classifier-grade thresholds also satisfy 1/2 < r <= 1.

    Attributes
    ----------
    value : float
        The threshold r.
    """
    value: float

    def __post_init__(self):
        try:
            r = float(self.value)
        except (TypeError, ValueError) as e:
            raise InvalidThresholdError(f"threshold must be a number, got {self.value!r}") from e
        if not 0.0 <= r <= 1.0:
            raise InvalidThresholdError(f"threshold {r!r} outside [0, 1]")
        object.__setattr__(self, 'value', r)

    @property
    def is_classifier_grade(self) -> bool:
        return 0.5 < self.value <= 1.0

    @classmethod
    def of(cls, r: 'ThresholdLike') -> 'SimilarityThreshold':
        return r if isinstance(r, SimilarityThreshold) else cls(r)

    @classmethod
    def classifier(cls, r: 'ThresholdLike') -> 'SimilarityThreshold':
        """
        Coerce r to a threshold usable by a three-valued classifier.

        Raises:
            InvalidThresholdError: If r is not in (1/2, 1].
        """
        threshold = cls.of(r)
        if not threshold.is_classifier_grade:
            raise InvalidThresholdError(f"classifier threshold {threshold.value!r} outside (1/2, 1]")
        return threshold

    @classmethod
    def from_label(cls, label: str, degrees: Optional[Mapping[str, float]] = None) -> 'SimilarityThreshold':
        """Resolve a verbal degree ("highly", "somewhat", "slightly") to its threshold."""
        table = DEFAULT_DEGREES if degrees is None else degrees
        key = label.strip().lower()
        if key not in table:
            raise InvalidThresholdError(f"unknown similarity degree {label!r}; known: {sorted(table)}")
        return cls(table[key])

    def admits(self, f: float) -> bool:
        """True iff r <= f, equality taken within SIMILARITY_TOL."""
        return self.value <= f + SIMILARITY_TOL

    def __float__(self):
        return self.value


ThresholdLike = Union[float, SimilarityThreshold]


def similarity_degree(f: float, degrees: Optional[Mapping[str, float]] = None) -> str:
    """
    Return the strongest verbal degree whose threshold f reaches, or "" if none.
    """
    table = DEFAULT_DEGREES if degrees is None else degrees
    reached = [(r, name) for name, r in table.items() if r <= f + SIMILARITY_TOL]
    return max(reached)[1] if reached else ""
