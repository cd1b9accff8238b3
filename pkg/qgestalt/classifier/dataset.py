import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple, TypeVar, Union

from qgestalt.generic.exceptions import (DimensionMismatchError, EmptyDatasetError,
                                         InconsistentLabelingError, InsufficientExperienceError)
from qgestalt.qstate.states import PureState
from .labels import ClassLabel

__all__ = ['QuantumDataSet', 'build_dataset', 'partition_labeled']
logger = logging.getLogger(__name__)

T = TypeVar('T')


def partition_labeled(labeled: Iterable[Tuple[T, Union[ClassLabel, str]]],
                      same: Callable[[T, T], bool]) -> Tuple[List[T], List[T], List[T]]:
    """
    Split labeled instances into positives, negatives and indeterminates.

    Instances judged equal by `same` are merged when their labels agree.

    Args:
        labeled: (instance, label) pairs in input order.
        same: Equality predicate between instances.

    Returns:
        Tuple of lists (positives, negatives, indeterminates), each in first-seen order.

    Raises:
        EmptyDatasetError: If nothing is given.
        InconsistentLabelingError: If one instance carries two different labels.
    """
    kept: List[Tuple[T, ClassLabel]] = []
    for index, (item, token) in enumerate(labeled):
        label = ClassLabel.of(token)
        prior = next((k for k in kept if same(k[0], item)), None)
        if prior is None:
            kept.append((item, label))
        elif prior[1] is not label:
            raise InconsistentLabelingError(
                f"instance {index} is labeled '{label}' but an equal instance is labeled '{prior[1]}'")
        else:
            logger.warning(f"instance {index} repeats an earlier '{label}' instance; merged")
    if not kept:
        raise EmptyDatasetError("no labeled instances")
    return tuple([item for item, label in kept if label is wanted]
                 for wanted in (ClassLabel.POSITIVE, ClassLabel.NEGATIVE, ClassLabel.INDETERMINATE))


@dataclass(frozen=True)
class QuantumDataSet:
    """
    A partition of classified instance states into positive, negative and indeterminate instances.

    Attributes
    ----------
    dimension : int
        Dimension of the space every instance lives in.
    positives, negatives, indeterminates : tuple of PureState
        Pairwise disjoint; positives and negatives are nonempty.
    """
    dimension: int
    positives: Tuple[PureState, ...]
    negatives: Tuple[PureState, ...]
    indeterminates: Tuple[PureState, ...] = ()

    def __post_init__(self):
        for name in ('positives', 'negatives', 'indeterminates'):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.positives:
            raise InsufficientExperienceError("the data set has no positive instances")
        if not self.negatives:
            raise InsufficientExperienceError("the data set has no negative instances")
        for psi in self.states:
            if psi.dimension != self.dimension:
                raise DimensionMismatchError(
                    f"instance of dimension {psi.dimension} in a data set of dimension {self.dimension}")
        groups = (self.positives, self.negatives, self.indeterminates)
        for i, left in enumerate(groups):
            for right in groups[i + 1:]:
                if any(a.is_close(b) for a in left for b in right):
                    raise InconsistentLabelingError("instance sets are not pairwise disjoint")

    @property
    def n_positive(self) -> int:
        return len(self.positives)

    @property
    def n_negative(self) -> int:
        return len(self.negatives)

    @property
    def n_indeterminate(self) -> int:
        return len(self.indeterminates)

    @property
    def states(self) -> Tuple[PureState, ...]:
        """All instances, the union of the three sets."""
        return self.positives + self.negatives + self.indeterminates

    def swapped(self) -> 'QuantumDataSet':
        """The same experience with positive and negative instances exchanged."""
        return QuantumDataSet(self.dimension, self.negatives, self.positives, self.indeterminates)

    def __repr__(self):
        return (f"QuantumDataSet(dimension={self.dimension}, n+={self.n_positive}, "
                f"n-={self.n_negative}, n?={self.n_indeterminate})")


def build_dataset(labeled: Sequence[Tuple[PureState, Union[ClassLabel, str]]]) -> QuantumDataSet:
    """
    Partition labeled states into a QuantumDataSet.

    Raises:
        EmptyDatasetError: If the list is empty.
        DimensionMismatchError: If the states differ in dimension.
        InconsistentLabelingError: If one state carries conflicting labels.
        InsufficientExperienceError: If positives or negatives end up empty.
    """
    if not labeled:
        raise EmptyDatasetError("no labeled states")
    dims = sorted({psi.dimension for psi, _ in labeled})
    if len(dims) > 1:
        raise DimensionMismatchError(f"labeled states have dimensions {dims}")
    positives, negatives, indeterminates = partition_labeled(labeled, lambda a, b: a.is_close(b))
    dataset = QuantumDataSet(dims[0], positives, negatives, indeterminates)
    logger.info(f"built {dataset!r}")
    return dataset
