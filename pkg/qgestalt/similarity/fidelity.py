"""
Fidelity between states and the r-similarity relation built on it.

Mixed-state fidelity is the Uhlmann fidelity F(rho, sigma) = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
It is evaluated as the squared nuclear norm ||sqrt(rho) sqrt(sigma)||_1^2, which is the same
quantity (the singular values of sqrt(rho) sqrt(sigma) are the square roots of the eigenvalues
of sqrt(rho) sigma sqrt(rho)) but does not take a second square root of round-off.

On projectors P_psi, P_phi: sqrt(P) = P, and ||P_psi P_phi||_1 = |<psi|phi>|, so the value
reduces to the pure-state fidelity |<psi|phi>|^2.
"""
import logging

import numpy as np

from qgestalt.generic.exceptions import FidelityConsistencyError
from qgestalt.qstate.operators import spectral_sqrt
from qgestalt.qstate.states import DensityOperator, PureState, require_same_dimension
from .threshold import SimilarityThreshold, ThresholdLike

__all__ = ['fidelity_pure', 'fidelity', 'raw_fidelity', 'r_similar',
           'settle_fidelity', 'FIDELITY_EXCESS_TOL', 'FIDELITY_SNAP']
logger = logging.getLogger(__name__)

FIDELITY_EXCESS_TOL = 1e-9
FIDELITY_SNAP = 1e-12


def settle_fidelity(raw: float) -> float:
    """
    Bring a computed fidelity into [0, 1].

    Values within FIDELITY_SNAP of 1 become exactly 1; round-off up to FIDELITY_EXCESS_TOL
    outside [0, 1] is clamped.

    Raises:
        FidelityConsistencyError: If raw lies further than FIDELITY_EXCESS_TOL outside [0, 1].
    """
    if not np.isfinite(raw) or raw > 1.0 + FIDELITY_EXCESS_TOL or raw < -FIDELITY_EXCESS_TOL:
        raise FidelityConsistencyError(f"computed fidelity {raw!r} outside [0, 1]")
    if raw >= 1.0 - FIDELITY_SNAP:
        return 1.0
    return max(0.0, float(raw))


def fidelity_pure(psi: PureState, phi: PureState) -> float:
    """
    Fidelity of two pure states, |<psi|phi>|^2.

    Raises:
        DimensionMismatchError: If the states differ in dimension.
    """
    require_same_dimension(psi.dimension, phi.dimension, what="states")
    return settle_fidelity(float(np.dot(psi.amplitudes, phi.amplitudes)) ** 2)


def raw_fidelity(rho: DensityOperator, sigma: DensityOperator) -> float:
    """
    Uhlmann fidelity before settling into [0, 1].
    """
    require_same_dimension(rho.dimension, sigma.dimension, what="density operators")
    product = spectral_sqrt(rho) @ spectral_sqrt(sigma)
    nuclear = float(np.sum(np.linalg.svd(product, compute_uv=False)))
    return nuclear ** 2


def fidelity(rho: DensityOperator, sigma: DensityOperator) -> float:
    """
    Uhlmann fidelity F(rho, sigma) in [0, 1].

    Raises:
        DimensionMismatchError: If the operators differ in dimension.
        NotPSDError: Propagated from the square roots.
        FidelityConsistencyError: If round-off pushes the value beyond 1 + 1e-9.
    """
    raw = raw_fidelity(rho, sigma)
    logger.debug(f"fidelity raw={raw!r}")
    return settle_fidelity(raw)


def r_similar(rho: DensityOperator, sigma: DensityOperator, r: ThresholdLike) -> bool:
    """
    True iff r <= F(rho, sigma); reflexive and symmetric, not transitive.
    """
    return SimilarityThreshold.of(r).admits(fidelity(rho, sigma))
