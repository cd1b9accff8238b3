import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from qgestalt.generic.exceptions import DimensionMismatchError, EmptyMixtureError, InvalidWeightsError, NotPSDError
from qgestalt.qstate import PureState, mixture, projector, psd_sqrt, spectral_sqrt, uniform_mixture
from qgestalt.tools import synthetic


def test_projector_is_idempotent():
    psi = PureState.normalized([1.0, 2.0, 2.0])
    p = projector(psi).matrix
    assert np.allclose(p @ p, p, atol=1e-12)
    assert projector(psi).is_pure()


def test_equal_mixture_of_basis_states_is_maximally_mixed():
    rho = uniform_mixture([PureState.basis(0), PureState.basis(1)])
    assert np.allclose(rho.matrix, np.eye(2) / 2)


def test_mixture_weights():
    states = [PureState.basis(0), PureState.uniform(2)]
    rho = mixture(states, [0.25, 0.75])
    expected = 0.25 * np.diag([1.0, 0.0]) + 0.75 * np.full((2, 2), 0.5)
    assert np.allclose(rho.matrix, expected, atol=1e-15)


def test_operators_accept_inputs_at_their_tolerance():
    """States with norm 1 + 0.9e-10 and weights summing to 1 + 0.9e-10 are still valid inputs."""
    edge = PureState([1 + 0.9e-10, 0.0])
    assert projector(edge).trace == pytest.approx(1.0, abs=1e-15)
    states = [PureState.basis(0, 3), PureState.basis(1, 3), PureState([0.0, 0.0, 1 + 0.9e-10])]
    rho = mixture(states, [0.3, 0.3, 0.4 + 0.9e-10])
    assert rho.trace == pytest.approx(1.0, abs=1e-15)
    assert np.allclose(np.diag(rho.matrix), [0.3, 0.3, 0.4], atol=1e-9)


@pytest.mark.parametrize("weights", [[1.0], [0.5, 0.6], [1.0, 0.0], [1.5, -0.5], [np.nan, 1.0]])
def test_mixture_rejects_bad_weights(weights):
    with pytest.raises(InvalidWeightsError):
        mixture([PureState.basis(0), PureState.basis(1)], weights)


def test_mixture_rejects_empty_and_mixed_dimensions():
    with pytest.raises(EmptyMixtureError):
        mixture([], [])
    with pytest.raises(EmptyMixtureError):
        uniform_mixture([])
    with pytest.raises(DimensionMismatchError):
        uniform_mixture([PureState.basis(0, 2), PureState.basis(0, 3)])


def test_psd_sqrt_clips_round_off():
    root = psd_sqrt(np.array([[1.0, 0.0], [0.0, -5e-11]]))
    assert np.allclose(root, np.diag([1.0, 0.0]))


def test_psd_sqrt_rejects_negative_matrix():
    with pytest.raises(NotPSDError):
        psd_sqrt(np.array([[1.1, 0.0], [0.0, -0.1]]))


def test_sqrt_of_projector_is_projector():
    p = projector(PureState.uniform(3))
    assert np.allclose(spectral_sqrt(p), p.matrix, atol=1e-12)


@seed(3)
@settings(max_examples=60, deadline=None)
@given(dimension=st.integers(min_value=2, max_value=8), draw_seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_sqrt_squares_back(dimension, draw_seed):
    """(sqrt rho)^2 = rho entrywise within 1e-8, and the root is symmetric."""
    rho = synthetic.random_density(np.random.default_rng(draw_seed), dimension)
    root = spectral_sqrt(rho)
    assert np.allclose(root, root.T, atol=1e-12)
    assert np.max(np.abs(root @ root - rho.matrix)) <= 1e-8
    assert np.min(np.linalg.eigvalsh(root)) >= -1e-10
