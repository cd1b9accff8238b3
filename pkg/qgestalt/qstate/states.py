import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from qgestalt.generic.exceptions import (DimensionMismatchError, InvalidDensityError,
                                         InvalidFeatureError, InvalidStateError)

__all__ = ['FeatureVector', 'PureState', 'DensityOperator', 'NORM_TOL', 'DENSITY_TOL',
           'EQUALITY_TOL', 'require_same_dimension', 'dimensions']
logger = logging.getLogger(__name__)

NORM_TOL = 1e-10
DENSITY_TOL = 1e-10
EQUALITY_TOL = 1e-12

ArrayLike = Union[Sequence[float], np.ndarray]


def _frozen(values: ArrayLike, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


def require_same_dimension(*dims: int, what: str = "operands") -> int:
    """Return the common dimension of the operands or raise DimensionMismatchError."""
    if len(set(dims)) > 1:
        raise DimensionMismatchError(f"{what} have dimensions {list(dims)}")
    return dims[0]


@dataclass(frozen=True, eq=False)
class FeatureVector:
    """
    An ordered list of real, finite features x_1..x_d with d >= 1.

    Attributes
    ----------
    values : np.ndarray
        Read-only float array of length d.
    """
    values: np.ndarray

    def __post_init__(self):
        try:
            arr = _frozen(self.values, 1)
        except (TypeError, ValueError) as e:
            raise InvalidFeatureError(f"features must be a flat list of numbers: {e}") from e
        if arr.size < 1:
            raise InvalidFeatureError("a feature vector needs at least one value")
        if not np.all(np.isfinite(arr)):
            raise InvalidFeatureError(f"non-finite feature in {arr.tolist()}")
        object.__setattr__(self, 'values', arr)

    @property
    def dimension(self) -> int:
        return int(self.values.size)

    def __len__(self):
        return self.dimension

    def __repr__(self):
        return f"FeatureVector({self.values.tolist()})"

    def is_close(self, other: 'FeatureVector', tol: float = EQUALITY_TOL) -> bool:
        return self.dimension == other.dimension and bool(np.allclose(self.values, other.values, rtol=0, atol=tol))


@dataclass(frozen=True, eq=False)
class PureState:
    """
    A unit vector in the real Hilbert space R^n, n >= 2.

    Attributes
    ----------
    amplitudes : np.ndarray
        Read-only float array c_1..c_n with Euclidean norm 1 (within NORM_TOL).
    """
    amplitudes: np.ndarray

    def __post_init__(self):
        try:
            arr = _frozen(self.amplitudes, 1)
        except (TypeError, ValueError) as e:
            raise InvalidStateError(f"amplitudes must be a flat list of numbers: {e}") from e
        if arr.size < 2:
            raise InvalidStateError(f"state dimension must be at least 2, got {arr.size}")
        if not np.all(np.isfinite(arr)):
            raise InvalidStateError("non-finite amplitude")
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidStateError(f"norm is {norm!r}, expected 1")
        object.__setattr__(self, 'amplitudes', arr)

    @classmethod
    def normalized(cls, values: ArrayLike) -> 'PureState':
        """Build a state from any nonzero vector by dividing out its norm."""
        arr = np.asarray(values, dtype=float)
        norm = float(np.linalg.norm(arr))
        if not np.isfinite(norm) or norm == 0.0:
            raise InvalidStateError("cannot normalize a zero or non-finite vector")
        return cls(arr / norm)

    @classmethod
    def basis(cls, index: int, dimension: int = 2) -> 'PureState':
        """The computational basis state |index> of R^dimension."""
        if not 0 <= index < dimension:
            raise InvalidStateError(f"basis index {index} outside dimension {dimension}")
        arr = np.zeros(dimension)
        arr[index] = 1.0
        return cls(arr)

    @classmethod
    def uniform(cls, dimension: int = 2) -> 'PureState':
        """The equal superposition; |+> for dimension 2."""
        return cls(np.full(dimension, 1.0 / np.sqrt(dimension)))

    @property
    def dimension(self) -> int:
        return int(self.amplitudes.size)

    def __len__(self):
        return self.dimension

    def __repr__(self):
        return f"PureState({self.amplitudes.tolist()})"

    def is_close(self, other: 'PureState', tol: float = EQUALITY_TOL) -> bool:
        """Amplitude equality within tol; states of other dimensions are never equal."""
        return self.dimension == other.dimension and bool(
            np.allclose(self.amplitudes, other.amplitudes, rtol=0, atol=tol))


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """
    A real symmetric positive-semidefinite n x n matrix with unit trace.

    Attributes
    ----------
    matrix : np.ndarray
        Read-only float array; symmetric, eigenvalues >= -DENSITY_TOL and trace 1,
        all within DENSITY_TOL.
    """
    matrix: np.ndarray

    def __post_init__(self):
        try:
            arr = _frozen(self.matrix, 2)
        except (TypeError, ValueError) as e:
            raise InvalidDensityError(f"matrix must be a 2-d array of numbers: {e}") from e
        problem = self.check(arr)
        if problem:
            raise InvalidDensityError(problem)
        object.__setattr__(self, 'matrix', arr)

    @staticmethod
    def check(arr: np.ndarray, tol: float = DENSITY_TOL) -> str:
        """
        Return a description of the first violated density-operator invariant, or "" if none.
        """
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 2:
            return f"expected a square matrix of size >= 2, got shape {arr.shape}"
        if not np.all(np.isfinite(arr)):
            return "non-finite entry"
        asym = float(np.max(np.abs(arr - arr.T)))
        if asym > tol:
            return f"not symmetric (max gap {asym:.3e})"
        trace = float(np.trace(arr))
        if abs(trace - 1.0) > tol:
            return f"trace is {trace!r}, expected 1"
        lowest = float(np.linalg.eigvalsh(arr)[0])
        if lowest < -tol:
            return f"negative eigenvalue {lowest:.3e}"
        return ""

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))

    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues."""
        return np.linalg.eigvalsh(self.matrix)

    def is_pure(self, tol: float = 1e-9) -> bool:
        """True when the operator is a rank-1 projector (purity tr(rho^2) = 1)."""
        return abs(float(np.sum(self.matrix * self.matrix)) - 1.0) <= tol

    def is_close(self, other: 'DensityOperator', tol: float = EQUALITY_TOL) -> bool:
        return self.dimension == other.dimension and bool(
            np.allclose(self.matrix, other.matrix, rtol=0, atol=tol))

    def __repr__(self):
        return f"DensityOperator({np.round(self.matrix, 6).tolist()})"


def dimensions(items: Iterable[Union[PureState, DensityOperator, FeatureVector]]) -> list:
    return [item.dimension for item in items]
