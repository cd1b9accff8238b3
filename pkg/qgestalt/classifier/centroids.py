import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from qgestalt.generic.exceptions import EmptyDatasetError, InsufficientExperienceError
from qgestalt.qstate.operators import uniform_mixture
from qgestalt.qstate.states import DensityOperator, FeatureVector, require_same_dimension
from .dataset import QuantumDataSet

__all__ = ['CentroidPair', 'positive_centroid', 'negative_centroid', 'centroids', 'classical_centroid']
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CentroidPair:
    """
    The positive and negative centroids of a data set.

    Attributes
    ----------
    positive : DensityOperator
        Uniform mixture of the positive instances.
    negative : DensityOperator
        Uniform mixture of the negative instances.
    """
    positive: DensityOperator
    negative: DensityOperator

    def __post_init__(self):
        require_same_dimension(self.positive.dimension, self.negative.dimension, what="centroids")

    @property
    def dimension(self) -> int:
        return self.positive.dimension

    def swapped(self) -> 'CentroidPair':
        return CentroidPair(self.negative, self.positive)


def positive_centroid(ds: QuantumDataSet) -> DensityOperator:
    """
    Return sum_i (1/n+) P_psi_i over the positive instances.

    Raises:
        InsufficientExperienceError: If there are no positive instances.
    """
    if not ds.positives:
        raise InsufficientExperienceError("no positive instances to average")
    return uniform_mixture(ds.positives)


def negative_centroid(ds: QuantumDataSet) -> DensityOperator:
    """
    Return sum_i (1/n-) P_psi_i over the negative instances.

    Raises:
        InsufficientExperienceError: If there are no negative instances.
    """
    if not ds.negatives:
        raise InsufficientExperienceError("no negative instances to average")
    return uniform_mixture(ds.negatives)


def centroids(ds: QuantumDataSet) -> CentroidPair:
    """Both centroids of a data set."""
    pair = CentroidPair(positive_centroid(ds), negative_centroid(ds))
    logger.info(f"centroids computed from {ds.n_positive} positive and {ds.n_negative} negative instances")
    return pair


def classical_centroid(points: Sequence[FeatureVector]) -> FeatureVector:
    """
    Componentwise arithmetic mean of feature vectors, the classical prototype.

    Raises:
        EmptyDatasetError: If no points are given.
        DimensionMismatchError: If the points differ in dimension.
    """
    if len(points) == 0:
        raise EmptyDatasetError("cannot average an empty list of feature vectors")
    require_same_dimension(*[p.dimension for p in points], what="feature vectors")
    return FeatureVector(np.mean(np.stack([p.values for p in points]), axis=0))
