import logging

import pytest

from qgestalt.classifier import ClassLabel, QuantumDataSet, build_dataset
from qgestalt.generic.exceptions import (DimensionMismatchError, EmptyDatasetError, InconsistentLabelingError,
                                         InsufficientExperienceError)
from qgestalt.qstate import PureState, amplitude_encode


def test_labels():
    assert ClassLabel.of('+') is ClassLabel.POSITIVE
    assert ClassLabel.of(' - ') is ClassLabel.NEGATIVE
    assert ClassLabel.of(ClassLabel.INDETERMINATE) is ClassLabel.INDETERMINATE
    assert str(ClassLabel.POSITIVE) == '+'
    assert ClassLabel.POSITIVE.swapped() is ClassLabel.NEGATIVE
    assert ClassLabel.INDETERMINATE.swapped() is ClassLabel.INDETERMINATE
    with pytest.raises(ValueError):
        ClassLabel.of('yes')


def test_build_dataset_partitions_in_order():
    a, b, c, d = (amplitude_encode([float(i)]) for i in range(4))
    ds = build_dataset([(a, '+'), (b, '-'), (c, '?'), (d, '+')])
    assert ds.dimension == 2
    assert (ds.n_positive, ds.n_negative, ds.n_indeterminate) == (2, 1, 1)
    assert ds.positives[1] is d
    assert len(ds.states) == 4


def test_same_label_duplicates_are_merged(caplog):
    a, b = amplitude_encode([1.0]), amplitude_encode([2.0])
    with caplog.at_level(logging.WARNING):
        ds = build_dataset([(a, '+'), (b, '-'), (amplitude_encode([1.0]), '+')])
    assert ds.n_positive == 1
    assert "merged" in caplog.text


def test_conflicting_labels():
    a = amplitude_encode([1.0])
    with pytest.raises(InconsistentLabelingError):
        build_dataset([(a, '+'), (amplitude_encode([2.0]), '-'), (amplitude_encode([1.0]), '-')])


def test_needs_both_polarities():
    with pytest.raises(EmptyDatasetError):
        build_dataset([])
    with pytest.raises(InsufficientExperienceError):
        build_dataset([(amplitude_encode([1.0]), '+'), (amplitude_encode([2.0]), '?')])
    with pytest.raises(InsufficientExperienceError):
        QuantumDataSet(2, (), (PureState.basis(0),))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        build_dataset([(amplitude_encode([1.0]), '+'), (amplitude_encode([1.0, 2.0]), '-')])
    with pytest.raises(DimensionMismatchError):
        QuantumDataSet(3, (PureState.basis(0),), (PureState.basis(1),))


def test_sets_must_be_disjoint():
    with pytest.raises(InconsistentLabelingError):
        QuantumDataSet(2, (PureState.basis(0),), (PureState.basis(0),))


def test_swapped():
    ds = QuantumDataSet(2, (PureState.basis(0),), (PureState.basis(1),), (PureState.uniform(2),))
    mirrored = ds.swapped()
    assert mirrored.positives == ds.negatives
    assert mirrored.negatives == ds.positives
    assert mirrored.indeterminates == ds.indeterminates
