import itertools
import logging

import numpy as np
import pytest

from qgestalt.classifier import (ClassLabel, GestaltClassifier, QuantumDataSet, centroids, classify,
                                 classify_batch, decide)
from qgestalt.generic.exceptions import BatchClassificationError, DimensionMismatchError, InvalidThresholdError
from qgestalt.qstate import DensityOperator, PureState, projector
from qgestalt.tools import synthetic

R_GRID = [0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0]


def literal_label(psi, positives, negatives, r):
    """The three-valued rule written out with plain numpy."""
    pos = sum(np.outer(p, p) for p in positives) / len(positives)
    neg = sum(np.outer(n, n) for n in negatives) / len(negatives)
    yes = r <= psi @ pos @ psi + 1e-12
    no = r <= psi @ neg @ psi + 1e-12
    return '+' if yes and not no else '-' if no and not yes else '?'


def test_decide_truth_table():
    assert decide(True, False) is ClassLabel.POSITIVE
    assert decide(False, True) is ClassLabel.NEGATIVE
    assert decide(True, True) is ClassLabel.INDETERMINATE
    assert decide(False, False) is ClassLabel.INDETERMINATE


def test_separated_centroids():
    ds = QuantumDataSet(3, (PureState.basis(0, 3),), (PureState.basis(1, 3),))
    pair = centroids(ds)
    assert classify(projector(PureState.basis(0, 3)), pair, 0.9) is ClassLabel.POSITIVE
    assert classify(projector(PureState.basis(1, 3)), pair, 0.9) is ClassLabel.NEGATIVE
    assert classify(projector(PureState.basis(2, 3)), pair, 0.9) is ClassLabel.INDETERMINATE


def test_similar_to_both_is_indeterminate():
    """A state halfway between |0> and |+> reaches both centroids."""
    pair = centroids(QuantumDataSet(2, (PureState.basis(0),), (PureState.uniform(2),)))
    between = PureState([np.cos(np.pi / 8), np.sin(np.pi / 8)])
    assert classify(projector(between), pair, 0.8) is ClassLabel.INDETERMINATE
    assert classify(projector(between), pair, 0.9) is ClassLabel.INDETERMINATE


def test_threshold_must_exceed_one_half():
    pair = centroids(QuantumDataSet(2, (PureState.basis(0),), (PureState.basis(1),)))
    with pytest.raises(InvalidThresholdError):
        classify(projector(PureState.basis(0)), pair, 0.5)
    with pytest.raises(InvalidThresholdError):
        GestaltClassifier(pair, 1.5)


def test_agrees_with_literal_rule(rng):
    disagreements = 0
    for dimension, (n_pos, n_neg) in itertools.product(range(2, 5), [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]):
        ds = synthetic.random_dataset(rng, dimension, n_pos, n_neg)
        pair = centroids(ds)
        positives = [p.amplitudes for p in ds.positives]
        negatives = [n.amplitudes for n in ds.negatives]
        for _ in range(5):
            psi = synthetic.random_pure_state(rng, dimension)
            for r in R_GRID:
                if str(classify(projector(psi), pair, r)) != literal_label(psi.amplitudes, positives, negatives, r):
                    disagreements += 1
    assert disagreements == 0


def literal_mixed_label(sigma, positives, negatives, r):
    """The same rule for a density-matrix query, fidelity as (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2."""
    def root(m):
        vals, vecs = np.linalg.eigh(m)
        return vecs @ np.diag(np.sqrt(np.clip(vals, 0.0, None) * (vals > 1e-12))) @ vecs.T

    def uhlmann(rho):
        inner = root(rho) @ sigma @ root(rho)
        return np.trace(root((inner + inner.T) / 2)) ** 2

    yes = r <= uhlmann(sum(np.outer(p, p) for p in positives) / len(positives)) + 1e-12
    no = r <= uhlmann(sum(np.outer(n, n) for n in negatives) / len(negatives)) + 1e-12
    return '+' if yes and not no else '-' if no and not yes else '?'


@pytest.mark.parametrize("diagonal,r,expected", [
    ([0.5, 0.5, 0.0], 0.9, ClassLabel.POSITIVE),
    ([0.25, 0.25, 0.5], 0.55, ClassLabel.INDETERMINATE),
    ([0.05, 0.05, 0.9], 0.9, ClassLabel.NEGATIVE),
])
def test_mixed_queries(diagonal, r, expected):
    """Commuting case: F = (sum_i sqrt(p_i q_i))^2, e.g. 0.5 to both sides for the middle query."""
    pair = centroids(QuantumDataSet(3, (PureState.basis(0, 3), PureState.basis(1, 3)), (PureState.basis(2, 3),)))
    assert classify(DensityOperator(np.diag(diagonal)), pair, r) is expected


def test_mixed_queries_agree_with_literal_rule(rng):
    checked = 0
    for dimension in range(2, 5):
        for n_pos, n_neg in [(1, 1), (2, 1), (2, 2), (3, 1)]:
            ds = synthetic.random_dataset(rng, dimension, n_pos, n_neg)
            pair = centroids(ds)
            positives = [p.amplitudes for p in ds.positives]
            negatives = [n.amplitudes for n in ds.negatives]
            queries = [synthetic.random_density(rng, dimension, rank=int(rng.integers(2, dimension + 1)))
                       for _ in range(4)] + [pair.positive, pair.negative]
            for sigma in queries:
                for r in R_GRID:
                    checked += 1
                    assert str(classify(sigma, pair, r)) == literal_mixed_label(sigma.matrix, positives, negatives, r)
    assert checked == 3 * 4 * 6 * len(R_GRID)


def test_polarity_symmetry(rng):
    for _ in range(20):
        ds = synthetic.random_dataset(rng, 3, 2, 2, 1)
        pair, mirrored = centroids(ds), centroids(ds.swapped())
        sigma = projector(synthetic.random_pure_state(rng, 3))
        for r in R_GRID:
            assert classify(sigma, mirrored, r) is classify(sigma, pair, r).swapped()


def test_batch_is_elementwise_and_independent_of_workers(rng):
    ds = synthetic.random_dataset(rng, 4, 3, 3)
    pair = centroids(ds)
    states = [projector(synthetic.random_pure_state(rng, 4)) for _ in range(50)]
    expected = [classify(sigma, pair, 0.6) for sigma in states]
    assert classify_batch(states, pair, 0.6) == expected
    assert classify_batch(states, pair, 0.6, workers=4) == expected
    assert classify_batch([], pair, 0.6) == []


@pytest.mark.parametrize("workers", [1, 3])
def test_batch_reports_first_failing_index(workers):
    pair = centroids(QuantumDataSet(2, (PureState.basis(0),), (PureState.basis(1),)))
    states = [projector(PureState.basis(0)), projector(PureState.basis(1)),
              projector(PureState.basis(0, 3)), projector(PureState.basis(1, 3))]
    with pytest.raises(BatchClassificationError) as info:
        classify_batch(states, pair, 0.9, workers=workers)
    assert info.value.index == 2
    assert isinstance(info.value.cause, DimensionMismatchError)


def test_classifier_verdicts(caplog):
    classifier = GestaltClassifier.from_dataset(
        QuantumDataSet(2, (PureState.basis(0),), (PureState.basis(1),)), 0.9, workers=2)
    assert classifier.classify_state(PureState.basis(0)) is ClassLabel.POSITIVE
    with caplog.at_level(logging.INFO):
        verdicts = classifier.verdicts([projector(PureState.basis(1)), projector(PureState.uniform(2))])
    assert [v.label for v in verdicts] == [ClassLabel.NEGATIVE, ClassLabel.INDETERMINATE]
    assert verdicts[1].fidelity_positive == pytest.approx(0.5, abs=1e-12)
    assert "classified 2 instances" in caplog.text


def test_classifier_logs_failures(caplog):
    classifier = GestaltClassifier.from_dataset(
        QuantumDataSet(2, (PureState.basis(0),), (PureState.basis(1),)), 0.9)
    with caplog.at_level(logging.INFO):
        with pytest.raises(BatchClassificationError):
            classifier.verdicts([projector(PureState.basis(0, 3))])
    assert "stopped at item 0" in caplog.text
