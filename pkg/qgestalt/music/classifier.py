import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from qgestalt.classifier.classify import decide
from qgestalt.classifier.dataset import partition_labeled
from qgestalt.classifier.labels import ClassLabel
from qgestalt.generic import Basic
from qgestalt.generic.exceptions import (DimensionMismatchError, EmptyDatasetError,
                                         InconsistentLabelingError, InsufficientExperienceError)
from qgestalt.qstate.operators import projector, uniform_mixture
from qgestalt.qstate.states import DensityOperator, require_same_dimension
from qgestalt.similarity.fidelity import fidelity
from qgestalt.similarity.threshold import SimilarityThreshold, ThresholdLike
from .encoding import MusicalIdeaState
from .similarity import SimilarityMode

__all__ = ['MusicalDataSet', 'build_musical_dataset', 'MusicalCentroids', 'musical_centroids',
           'centroid_fidelities', 'classify_theme', 'MusicalVerdict', 'MusicalClassifier']
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MusicalDataSet:
    """
    Musical ideas judged against a theme: positive, negative and indeterminate instances.

    The conditions are those of QuantumDataSet: pairwise disjoint sets (two ideas are equal
    when both channels are), uniform channel dimensions, nonempty positives and negatives.
    """
    positives: Tuple[MusicalIdeaState, ...]
    negatives: Tuple[MusicalIdeaState, ...]
    indeterminates: Tuple[MusicalIdeaState, ...] = ()

    def __post_init__(self):
        for name in ('positives', 'negatives', 'indeterminates'):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.positives:
            raise InsufficientExperienceError("the musical data set has no positive instances")
        if not self.negatives:
            raise InsufficientExperienceError("the musical data set has no negative instances")
        ideas = self.ideas
        for attr in ('melodic', 'rhythmic'):
            dims = sorted({getattr(idea, attr).dimension for idea in ideas})
            if len(dims) > 1:
                raise DimensionMismatchError(f"{attr} channels have dimensions {dims}")
        groups = (self.positives, self.negatives, self.indeterminates)
        for i, left in enumerate(groups):
            for right in groups[i + 1:]:
                if any(a.is_close(b) for a in left for b in right):
                    raise InconsistentLabelingError("musical instance sets are not pairwise disjoint")

    @property
    def ideas(self) -> Tuple[MusicalIdeaState, ...]:
        return self.positives + self.negatives + self.indeterminates

    def swapped(self) -> 'MusicalDataSet':
        return MusicalDataSet(self.negatives, self.positives, self.indeterminates)

    def __repr__(self):
        return (f"MusicalDataSet(n+={len(self.positives)}, n-={len(self.negatives)}, "
                f"n?={len(self.indeterminates)})")


def build_musical_dataset(labeled: Sequence[Tuple[MusicalIdeaState, Union[ClassLabel, str]]]) -> MusicalDataSet:
    """
    Partition labeled musical ideas into a MusicalDataSet.

    Raises:
        EmptyDatasetError, InconsistentLabelingError, InsufficientExperienceError,
        DimensionMismatchError: As build_dataset.
    """
    if not labeled:
        raise EmptyDatasetError("no labeled musical ideas")
    positives, negatives, indeterminates = partition_labeled(labeled, lambda a, b: a.is_close(b))
    dataset = MusicalDataSet(positives, negatives, indeterminates)
    logger.info(f"built {dataset!r}")
    return dataset


@dataclass(frozen=True)
class MusicalCentroids:
    """
    Per-channel, per-polarity uniform mixtures of a musical data set.
    """
    melodic_positive: DensityOperator
    rhythmic_positive: DensityOperator
    melodic_negative: DensityOperator
    rhythmic_negative: DensityOperator

    def __post_init__(self):
        require_same_dimension(self.melodic_positive.dimension, self.melodic_negative.dimension,
                               what="melodic centroids")
        require_same_dimension(self.rhythmic_positive.dimension, self.rhythmic_negative.dimension,
                               what="rhythmic centroids")

    def swapped(self) -> 'MusicalCentroids':
        return MusicalCentroids(self.melodic_negative, self.rhythmic_negative,
                                self.melodic_positive, self.rhythmic_positive)


def musical_centroids(ds: MusicalDataSet) -> MusicalCentroids:
    """
    Each channel of the positive (negative) centroid mixes that channel of every positive
    (negative) idea with weight 1/n+ (1/n-).

    Raises:
        InsufficientExperienceError: If either side is empty.
    """
    if not ds.positives or not ds.negatives:
        raise InsufficientExperienceError("musical centroids need positive and negative instances")
    return MusicalCentroids(uniform_mixture([idea.melodic for idea in ds.positives]),
                            uniform_mixture([idea.rhythmic for idea in ds.positives]),
                            uniform_mixture([idea.melodic for idea in ds.negatives]),
                            uniform_mixture([idea.rhythmic for idea in ds.negatives]))


@dataclass(frozen=True)
class MusicalVerdict:
    """A musical classification with the four channel fidelities behind it."""
    label: ClassLabel
    melodic_positive: float
    melodic_negative: float
    rhythmic_positive: float
    rhythmic_negative: float


def centroid_fidelities(nu: MusicalIdeaState, c: MusicalCentroids) -> Tuple[float, float, float, float]:
    """Fidelities of nu to the melodic+, melodic-, rhythmic+ and rhythmic- centroids."""
    require_same_dimension(nu.melodic.dimension, c.melodic_positive.dimension, what="melodic idea and centroid")
    require_same_dimension(nu.rhythmic.dimension, c.rhythmic_positive.dimension, what="rhythmic idea and centroid")
    melodic, rhythmic = projector(nu.melodic), projector(nu.rhythmic)
    return (fidelity(melodic, c.melodic_positive), fidelity(melodic, c.melodic_negative),
            fidelity(rhythmic, c.rhythmic_positive), fidelity(rhythmic, c.rhythmic_negative))


def _verdict(nu: MusicalIdeaState, c: MusicalCentroids, mode: SimilarityMode,
             threshold: SimilarityThreshold) -> MusicalVerdict:
    m_pos, m_neg, r_pos, r_neg = centroid_fidelities(nu, c)
    label = decide(mode.combine(threshold.admits(m_pos), threshold.admits(r_pos)),
                   mode.combine(threshold.admits(m_neg), threshold.admits(r_neg)))
    return MusicalVerdict(label, m_pos, m_neg, r_pos, r_neg)


def classify_theme(nu: MusicalIdeaState, c: MusicalCentroids, mode: SimilarityMode,
                   r_star: ThresholdLike) -> ClassLabel:
    """
    The musical classifier: + if nu is similar to the positive centroid and not to the
    negative one, - in the mirror case, ? otherwise. Similarity follows `mode` channel-wise.

    Raises:
        InvalidThresholdError: If r_star is outside (1/2, 1].
        DimensionMismatchError: If a channel does not match its centroid.
    """
    threshold = SimilarityThreshold.classifier(r_star)
    return _verdict(nu, c, SimilarityMode.of(mode), threshold).label


class MusicalClassifier(Basic):
    """
    Musical classifier bound to one data set's centroids, a similarity mode and a threshold.
    """

    def __init__(self, c: MusicalCentroids, mode: SimilarityMode, r_star: ThresholdLike):
        super().__init__()
        self.centroids = c
        self.mode = SimilarityMode.of(mode)
        self.threshold = SimilarityThreshold.classifier(r_star)

    @classmethod
    def from_dataset(cls, ds: MusicalDataSet, mode: SimilarityMode, r_star: ThresholdLike) -> 'MusicalClassifier':
        return cls(musical_centroids(ds), mode, r_star)

    def __repr__(self):
        return f"MusicalClassifier(mode={self.mode.value}, r*={self.threshold.value})"

    def classify(self, nu: MusicalIdeaState) -> ClassLabel:
        return self.verdict(nu).label

    def verdict(self, nu: MusicalIdeaState) -> MusicalVerdict:
        return _verdict(nu, self.centroids, self.mode, self.threshold)

    def verdicts(self, ideas: Sequence[MusicalIdeaState]) -> List[MusicalVerdict]:
        results = [self.verdict(nu) for nu in ideas]
        return self._pass(results, info=f"{self!r} classified {len(results)} musical ideas")
