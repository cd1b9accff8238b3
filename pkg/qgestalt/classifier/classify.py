import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from qgestalt.generic import Basic
from qgestalt.generic.exceptions import BatchClassificationError, QGestaltError
from qgestalt.qstate.operators import projector
from qgestalt.qstate.states import DensityOperator, PureState, require_same_dimension
from qgestalt.similarity.fidelity import fidelity
from qgestalt.similarity.threshold import SimilarityThreshold, ThresholdLike
from .centroids import CentroidPair, centroids as centroids_of
from .dataset import QuantumDataSet
from .labels import ClassLabel

__all__ = ['classify', 'classify_batch', 'decide', 'score', 'Verdict', 'GestaltClassifier']
logger = logging.getLogger(__name__)


def decide(similar_to_positive: bool, similar_to_negative: bool) -> ClassLabel:
    """
    The three-valued rule: + when only the positive centroid is similar, - when only the
    negative one is, ? otherwise (both or neither).
    """
    if similar_to_positive and not similar_to_negative:
        return ClassLabel.POSITIVE
    if similar_to_negative and not similar_to_positive:
        return ClassLabel.NEGATIVE
    return ClassLabel.INDETERMINATE


def score(sigma: DensityOperator, pair: CentroidPair) -> Tuple[float, float]:
    """Fidelities of sigma to the positive and the negative centroid."""
    require_same_dimension(sigma.dimension, pair.dimension, what="instance and centroids")
    return fidelity(sigma, pair.positive), fidelity(sigma, pair.negative)


def classify(sigma: DensityOperator, pair: CentroidPair, r_star: ThresholdLike) -> ClassLabel:
    """
    Classify a new instance against the centroids of a data set.

    Args:
        sigma (DensityOperator): The instance; pure instances enter as projectors.
        pair (CentroidPair): The positive and negative centroids.
        r_star: Threshold in (1/2, 1].

    Returns:
        ClassLabel: +, - or ?.

    Raises:
        InvalidThresholdError: If r_star is outside (1/2, 1].
        DimensionMismatchError: If sigma and the centroids differ in dimension.
    """
    threshold = SimilarityThreshold.classifier(r_star)
    f_pos, f_neg = score(sigma, pair)
    return decide(threshold.admits(f_pos), threshold.admits(f_neg))


@dataclass(frozen=True)
class Verdict:
    """A classification together with the fidelities it was decided on."""
    label: ClassLabel
    fidelity_positive: float
    fidelity_negative: float


def _verdicts(states: Sequence[DensityOperator], pair: CentroidPair, threshold: SimilarityThreshold,
              workers: int) -> List[Verdict]:
    def judge(sigma: DensityOperator) -> Verdict:
        f_pos, f_neg = score(sigma, pair)
        return Verdict(decide(threshold.admits(f_pos), threshold.admits(f_neg)), f_pos, f_neg)

    results: List[Verdict] = []
    try:
        if workers > 1 and len(states) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                # map yields in input order, so the first failure seen is the lowest index
                for verdict in pool.map(judge, states):
                    results.append(verdict)
        else:
            for sigma in states:
                results.append(judge(sigma))
    except QGestaltError as e:
        raise BatchClassificationError(len(results), e) from e
    return results


def classify_batch(states: Sequence[DensityOperator], pair: CentroidPair, r_star: ThresholdLike,
                   workers: int = 1) -> List[ClassLabel]:
    """
    Elementwise classify, order-preserving.

    Args:
        workers (int): Threads to spread the batch over; results do not depend on it.

    Raises:
        InvalidThresholdError: If r_star is outside (1/2, 1].
        BatchClassificationError: Wrapping the first failing element, with its index.
    """
    threshold = SimilarityThreshold.classifier(r_star)
    return [v.label for v in _verdicts(states, pair, threshold, workers)]


class GestaltClassifier(Basic):
    """
    A classifier bound to one data set's centroids and one threshold.

    Attributes:
        centroids (CentroidPair): The positive and negative centroids.
        threshold (SimilarityThreshold): The classifier-grade threshold r*.
        workers (int): Threads used by the batch methods.
    """

    def __init__(self, pair: CentroidPair, r_star: ThresholdLike, workers: int = 1):
        super().__init__()
        self.centroids = pair
        self.threshold = SimilarityThreshold.classifier(r_star)
        self.workers = max(1, int(workers))

    @classmethod
    def from_dataset(cls, ds: QuantumDataSet, r_star: ThresholdLike, workers: int = 1) -> 'GestaltClassifier':
        return cls(centroids_of(ds), r_star, workers)

    def __repr__(self):
        return f"GestaltClassifier(dimension={self.centroids.dimension}, r*={self.threshold.value})"

    def classify(self, sigma: DensityOperator) -> ClassLabel:
        return classify(sigma, self.centroids, self.threshold)

    def classify_state(self, psi: PureState) -> ClassLabel:
        return self.classify(projector(psi))

    def verdicts(self, states: Sequence[DensityOperator]) -> List[Verdict]:
        """Labels plus the fidelities behind them, in input order."""
        try:
            verdicts = _verdicts(states, self.centroids, self.threshold, self.workers)
        except BatchClassificationError as e:
            self._fail(e, info=f"{self!r} stopped at item {e.index} of {len(states)}")
        return self._pass(verdicts, info=f"classified {len(verdicts)} instances at r*={self.threshold.value}")
