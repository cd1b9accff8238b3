"""
Seeded generators of states, operators, data sets and themes for the self-test and the tests.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from qgestalt.classifier.dataset import QuantumDataSet
from qgestalt.classifier.labels import ClassLabel
from qgestalt.music.classifier import MusicalDataSet
from qgestalt.music.encoding import EncodingConfig, MusicalIdeaState, encode_theme
from qgestalt.music.theme import AbstractTheme
from qgestalt.qstate.operators import mixture
from qgestalt.qstate.states import DensityOperator, FeatureVector, PureState

__all__ = ['make_rng', 'random_pure_state', 'random_density', 'orthogonal_support_pair', 'random_dataset',
           'flower_rows', 'random_melody', 'random_theme', 'random_musical_dataset']
logger = logging.getLogger(__name__)

_DURATIONS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(3, 2), Fraction(2))


def make_rng(seed: Union[int, Sequence[int]] = 0) -> np.random.Generator:
    """A numpy Generator; [seed, stream] pairs give independent streams."""
    return np.random.default_rng(seed)


def random_pure_state(rng: np.random.Generator, dimension: int) -> PureState:
    """A uniformly distributed real unit vector."""
    return PureState.normalized(rng.standard_normal(dimension))


def random_density(rng: np.random.Generator, dimension: int, rank: Optional[int] = None) -> DensityOperator:
    """A mixture of `rank` random pure states (1..dimension when unset) with random weights."""
    k = int(rng.integers(1, dimension + 1)) if rank is None else rank
    states = [random_pure_state(rng, dimension) for _ in range(k)]
    weights = rng.dirichlet(np.ones(k)) if k > 1 else np.ones(1)
    weights = weights / np.sum(weights)
    return mixture(states, weights.tolist())


def orthogonal_support_pair(rng: np.random.Generator, dimension: int) -> Tuple[DensityOperator, DensityOperator]:
    """Two mixtures whose supports are orthogonal, so that rho sigma = 0."""
    basis, _ = np.linalg.qr(rng.standard_normal((dimension, dimension)))
    split = int(rng.integers(1, dimension))
    left = [PureState(basis[:, i]) for i in range(split)]
    right = [PureState(basis[:, i]) for i in range(split, dimension)]
    return (mixture(left, [1.0 / len(left)] * len(left)),
            mixture(right, [1.0 / len(right)] * len(right)))


def random_dataset(rng: np.random.Generator, dimension: int, n_positive: int, n_negative: int,
                   n_indeterminate: int = 0) -> QuantumDataSet:
    def draw(n):
        return tuple(random_pure_state(rng, dimension) for _ in range(n))
    return QuantumDataSet(dimension, draw(n_positive), draw(n_negative), draw(n_indeterminate))


def flower_rows(rng: np.random.Generator, n_positive: int = 5, n_negative: int = 5,
                n_indeterminate: int = 2) -> List[Tuple[FeatureVector, ClassLabel]]:
    """
    Two-feature rows shaped like petal length and petal width: a compact small-petal
    cluster (+), a large-petal cluster (-) and borderline flowers (?).
    """
    clusters = ((ClassLabel.POSITIVE, n_positive, (1.5, 0.25), (0.2, 0.05)),
                (ClassLabel.NEGATIVE, n_negative, (5.5, 2.0), (0.5, 0.25)),
                (ClassLabel.INDETERMINATE, n_indeterminate, (3.5, 1.1), (0.3, 0.1)))
    rows = []
    for label, n, centre, spread in clusters:
        for _ in range(n):
            point = np.round(rng.normal(centre, spread), 2)
            rows.append((FeatureVector(np.abs(point) + 0.01), label))
    return rows


def random_melody(rng: np.random.Generator, n_events: int, rest_rate: float = 0.15) -> Tuple[List[Optional[int]], List[Fraction]]:
    """
    MIDI pitches (None for rests) and durations of a random walk melody; never all rests.
    """
    pitches: List[Optional[int]] = []
    pitch = int(rng.integers(55, 80))
    for index in range(n_events):
        if index > 0 and rng.random() < rest_rate:
            pitches.append(None)
            continue
        pitch = int(np.clip(pitch + rng.integers(-7, 8), 36, 96))
        pitches.append(pitch)
    durations = [_DURATIONS[int(rng.integers(0, len(_DURATIONS)))] for _ in range(n_events)]
    return pitches, durations


def random_theme(rng: np.random.Generator, name: str, n_events: int) -> AbstractTheme:
    pitches, durations = random_melody(rng, n_events)
    return AbstractTheme.from_pitches(name, pitches, durations)


def _variant(rng: np.random.Generator, theme: AbstractTheme, name: str) -> AbstractTheme:
    intervals = list(theme.sounding_intervals)
    if len(intervals) > 1:
        spot = int(rng.integers(1, len(intervals)))
        intervals[spot] += int(rng.choice([-2, -1, 1, 2]))
    return theme.with_intervals(intervals, name)


def random_musical_dataset(rng: np.random.Generator, n_positive: int, n_negative: int, n_indeterminate: int = 0,
                           config: EncodingConfig = EncodingConfig(span=64),
                           n_events: int = 8) -> Tuple[MusicalDataSet, List[AbstractTheme]]:
    """
    Positives are variants of one random theme, negatives and indeterminates are unrelated
    random themes. Returns the data set and the themes it was encoded from.
    """
    base = random_theme(rng, "base", n_events)
    positives = [base] + [_variant(rng, base, f"variant{i}") for i in range(1, n_positive)]
    negatives = [random_theme(rng, f"other{i}", n_events) for i in range(n_negative)]
    unsure = [random_theme(rng, f"unsure{i}", n_events) for i in range(n_indeterminate)]
    themes = positives + negatives + unsure

    def encode(group: Sequence[AbstractTheme]) -> List[MusicalIdeaState]:
        kept: List[MusicalIdeaState] = []
        for theme in group:
            idea = encode_theme(theme, config)
            if not any(idea.is_close(other) for other in kept):
                kept.append(idea)
        return kept

    pos, neg, ind = encode(positives), encode(negatives), encode(unsure)
    # drop accidental collisions across groups so the sets stay disjoint
    neg = [n for n in neg if not any(n.is_close(p) for p in pos)]
    ind = [i for i in ind if not any(i.is_close(o) for o in pos + neg)]
    return MusicalDataSet(tuple(pos), tuple(neg), tuple(ind)), themes
