import logging
from typing import Sequence

import numpy as np

from qgestalt.generic.exceptions import (EmptyMixtureError, InvalidDensityError,
                                         InvalidWeightsError, NotPSDError)
from .states import DENSITY_TOL, DensityOperator, PureState, dimensions, require_same_dimension

__all__ = ['projector', 'mixture', 'uniform_mixture', 'spectral_sqrt', 'psd_sqrt',
           'PSD_CLIP_TOL', 'SPECTRAL_ZERO']
logger = logging.getLogger(__name__)

PSD_CLIP_TOL = 1e-10
# eigensolver round-off on exact zeros is ~1e-16; its square root would not be
SPECTRAL_ZERO = 1e-12


def _unit(amplitudes: np.ndarray) -> np.ndarray:
    return amplitudes / np.linalg.norm(amplitudes)


def projector(psi: PureState) -> DensityOperator:
    """
    Return the rank-1 projector psi psi^T.

    Args:
        psi (PureState): The state to project onto.

    Returns:
        DensityOperator: A trace-1, idempotent operator.
    """
    a = _unit(psi.amplitudes)
    return DensityOperator(np.outer(a, a))


def mixture(states: Sequence[PureState], weights: Sequence[float]) -> DensityOperator:
    """
    Return the weighted sum of projectors sum_i w_i psi_i psi_i^T.

    Args:
        states (Sequence[PureState]): Nonempty, all of one dimension.
        weights (Sequence[float]): Positive weights, same length, summing to 1.

    Raises:
        EmptyMixtureError: If no states are given.
        InvalidWeightsError: On length mismatch, non-positive weights or a sum off 1.
        DimensionMismatchError: If the states differ in dimension.
    """
    if len(states) == 0:
        raise EmptyMixtureError("a mixture needs at least one state")
    if len(weights) != len(states):
        raise InvalidWeightsError(f"{len(weights)} weights for {len(states)} states")
    w = np.asarray(weights, dtype=float)
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise InvalidWeightsError(f"weights must be positive reals: {w.tolist()}")
    if abs(float(np.sum(w)) - 1.0) > DENSITY_TOL:
        raise InvalidWeightsError(f"weights sum to {float(np.sum(w))!r}, expected 1")
    require_same_dimension(*dimensions(states), what="mixture states")

    # renormalised: each input may be off by its own tolerance
    w = w / float(np.sum(w))
    amplitudes = np.stack([_unit(psi.amplitudes) for psi in states])
    rho = np.einsum('k,ki,kj->ij', w, amplitudes, amplitudes)
    rho = (rho + rho.T) / 2.0
    try:
        return DensityOperator(rho)
    except InvalidDensityError as e:
        logger.error(f"mixture of {len(states)} states failed validation: {e}")
        raise


def uniform_mixture(states: Sequence[PureState]) -> DensityOperator:
    """Equal-weight mixture 1/n sum_i psi_i psi_i^T."""
    if len(states) == 0:
        raise EmptyMixtureError("a mixture needs at least one state")
    return mixture(states, [1.0 / len(states)] * len(states))


def psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    """
    Square root of a symmetric positive-semidefinite matrix through its spectral decomposition.

    Eigenvalues in [-PSD_CLIP_TOL, SPECTRAL_ZERO] are taken as zero.

    Raises:
        NotPSDError: If an eigenvalue lies below -PSD_CLIP_TOL.
    """
    sym = (np.asarray(matrix, dtype=float) + np.asarray(matrix, dtype=float).T) / 2.0
    eigvals, eigvecs = np.linalg.eigh(sym)
    if eigvals[0] < -PSD_CLIP_TOL:
        raise NotPSDError(f"eigenvalue {eigvals[0]:.3e} below -{PSD_CLIP_TOL}")
    clipped = np.where(eigvals <= SPECTRAL_ZERO, 0.0, eigvals)
    if np.any(clipped != eigvals):
        logger.debug(f"clipped {int(np.sum(clipped != eigvals))} near-zero eigenvalues")
    root = (eigvecs * np.sqrt(clipped)) @ eigvecs.T
    return (root + root.T) / 2.0


def spectral_sqrt(rho: DensityOperator) -> np.ndarray:
    """
    Return the unique PSD square root of a density operator, (sqrt rho)^2 = rho.
    """
    return psd_sqrt(rho.matrix)
