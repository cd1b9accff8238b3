import logging
from enum import Enum
from typing import Tuple

from qgestalt.qstate.states import require_same_dimension
from qgestalt.similarity.fidelity import fidelity_pure
from qgestalt.similarity.threshold import SimilarityThreshold, ThresholdLike
from .encoding import MusicalIdeaState

__all__ = ['SimilarityMode', 'channel_fidelities', 'musical_similar']
logger = logging.getLogger(__name__)


class SimilarityMode(Enum):
    """Which channels must be similar: one of them, both (strong) or either (weak)."""
    MELODIC = 'melodic'
    RHYTHMIC = 'rhythmic'
    STRONG = 'strong'
    WEAK = 'weak'

    @classmethod
    def of(cls, mode) -> 'SimilarityMode':
        if isinstance(mode, SimilarityMode):
            return mode
        try:
            return cls(str(mode).strip().lower())
        except ValueError:
            raise ValueError(f"unknown similarity mode {mode!r}; expected one of "
                             f"{[m.value for m in cls]}") from None

    def combine(self, melodic: bool, rhythmic: bool) -> bool:
        """Fold the per-channel verdicts into this mode's verdict."""
        if self is SimilarityMode.MELODIC:
            return melodic
        if self is SimilarityMode.RHYTHMIC:
            return rhythmic
        if self is SimilarityMode.STRONG:
            return melodic and rhythmic
        return melodic or rhythmic


def channel_fidelities(a: MusicalIdeaState, b: MusicalIdeaState) -> Tuple[float, float]:
    """
    Melodic and rhythmic fidelity of two musical ideas.

    Raises:
        DimensionMismatchError: If either channel differs in dimension.
    """
    require_same_dimension(a.melodic.dimension, b.melodic.dimension, what="melodic channels")
    require_same_dimension(a.rhythmic.dimension, b.rhythmic.dimension, what="rhythmic channels")
    return fidelity_pure(a.melodic, b.melodic), fidelity_pure(a.rhythmic, b.rhythmic)


def musical_similar(a: MusicalIdeaState, b: MusicalIdeaState, mode: SimilarityMode, r: ThresholdLike) -> bool:
    """
    Graded musical similarity: r-similarity on the channel(s) selected by `mode`.
    """
    threshold = SimilarityThreshold.of(r)
    f_melodic, f_rhythmic = channel_fidelities(a, b)
    return SimilarityMode.of(mode).combine(threshold.admits(f_melodic), threshold.admits(f_rhythmic))
