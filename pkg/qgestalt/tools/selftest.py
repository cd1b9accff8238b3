"""
Self-verification suite behind `qgestalt selftest`.

Every group draws its data from one seeded generator and reports PASS or FAIL with a short
detail line. The oracles below re-evaluate the classifiers from their definitions with plain
numpy and share no code with the library's classification path.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from qgestalt.classifier.centroids import centroids
from qgestalt.classifier.classify import classify
from qgestalt.classifier.labels import ClassLabel
from qgestalt.generic import Basic
from qgestalt.generic.exceptions import QGestaltError
from qgestalt.music.classifier import classify_theme, musical_centroids
from qgestalt.music.encoding import EncodingConfig, encode_melodic, encode_theme
from qgestalt.music.fixtures import load_fixture
from qgestalt.music.similarity import SimilarityMode, musical_similar
from qgestalt.music.theme import AbstractTheme
from qgestalt.qstate.encoding import amplitude_encode, decode_features
from qgestalt.qstate.operators import projector
from qgestalt.qstate.states import DensityOperator, PureState
from qgestalt.similarity.fidelity import fidelity_pure, r_similar, raw_fidelity, settle_fidelity
from qgestalt.similarity.threshold import SIMILARITY_TOL
from . import synthetic

__all__ = ['CheckResult', 'SelfTest', 'R_STAR_GRID', 'oracle_label', 'oracle_mixed_label', 'oracle_musical_label']
logger = logging.getLogger(__name__)

R_STAR_GRID = tuple(round(0.55 + 0.05 * i, 2) for i in range(10))

FidelityFn = Callable[[DensityOperator, DensityOperator], float]


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: List[str] = field(default_factory=list)

    def lines(self) -> List[str]:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return [head] + [f"    {line}" for line in self.details]


def _reaches(r: float, f: float) -> bool:
    return r <= f + SIMILARITY_TOL


def oracle_label(psi: np.ndarray, positives: List[np.ndarray], negatives: List[np.ndarray], r: float) -> str:
    """
    The three-valued rule evaluated literally for a pure query psi: centroids as averages of
    outer products, fidelity to a mixture as psi^T rho psi.
    """
    psi = np.asarray(psi, dtype=float)
    rho_pos = sum(np.outer(p, p) for p in positives) / len(positives)
    rho_neg = sum(np.outer(n, n) for n in negatives) / len(negatives)
    pos = _reaches(r, float(psi @ rho_pos @ psi))
    neg = _reaches(r, float(psi @ rho_neg @ psi))
    if pos and not neg:
        return '+'
    if neg and not pos:
        return '-'
    return '?'


def oracle_mixed_label(sigma: np.ndarray, positives: List[np.ndarray], negatives: List[np.ndarray],
                       r: float) -> str:
    """
    The three-valued rule for a query density matrix sigma, with the fidelity taken as
    (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 from two eigendecompositions.
    """
    def uhlmann(rho: np.ndarray) -> float:
        vals, vecs = np.linalg.eigh(rho)
        root = vecs @ np.diag(np.sqrt(np.where(vals > 1e-12, vals, 0.0))) @ vecs.T
        inner = root @ sigma @ root
        spectrum = np.linalg.eigvalsh((inner + inner.T) / 2)
        return float(np.sum(np.sqrt(np.where(spectrum > 1e-12, spectrum, 0.0)))) ** 2

    sigma = np.asarray(sigma, dtype=float)
    pos = _reaches(r, uhlmann(sum(np.outer(p, p) for p in positives) / len(positives)))
    neg = _reaches(r, uhlmann(sum(np.outer(n, n) for n in negatives) / len(negatives)))
    if pos and not neg:
        return '+'
    if neg and not pos:
        return '-'
    return '?'


def oracle_musical_label(melodic: np.ndarray, rhythmic: np.ndarray, positives, negatives, mode: str,
                         r: float) -> str:
    """
    The musical rule evaluated literally; positives/negatives are lists of
    (melodic amplitudes, rhythmic amplitudes).
    """
    def similar_to(group) -> bool:
        kappa_m = sum(np.outer(m, m) for m, _ in group) / len(group)
        kappa_r = sum(np.outer(h, h) for _, h in group) / len(group)
        sim_m = _reaches(r, float(melodic @ kappa_m @ melodic))
        sim_r = _reaches(r, float(rhythmic @ kappa_r @ rhythmic))
        if mode == 'melodic':
            return sim_m
        if mode == 'rhythmic':
            return sim_r
        if mode == 'strong':
            return sim_m and sim_r
        return sim_m or sim_r

    pos, neg = similar_to(positives), similar_to(negatives)
    if pos and not neg:
        return '+'
    if neg and not pos:
        return '-'
    return '?'


class SelfTest(Basic):
    """
    Runs the verification groups.

    Attributes:
        seed (int): Seed of every synthetic draw.
        fidelity_fn: The fidelity under test in the axiom groups; the raw (unclamped)
            library fidelity unless a replacement is injected.
    """
    GROUPS = ('fidelity-axioms', 'pure-reduction', 'encoding-roundtrip', 'non-transitivity',
              'classifier-oracle', 'polarity-symmetry', 'music-fixtures', 'transposition-invariance',
              'mcl-oracle')

    def __init__(self, seed: int = 0, fidelity_fn: Optional[FidelityFn] = None):
        super().__init__()
        self.seed = seed
        self.fidelity_fn = fidelity_fn or raw_fidelity

    def rng(self, group: str) -> np.random.Generator:
        # one stream per group, so groups can run alone and still see the same data
        return synthetic.make_rng([self.seed, self.GROUPS.index(group)])

    def run(self, groups: Optional[List[str]] = None) -> List[CheckResult]:
        results = []
        for group in groups or self.GROUPS:
            method = getattr(self, 'check_' + group.replace('-', '_'))
            try:
                result = method()
            except QGestaltError as e:
                result = CheckResult(group, False, [f"raised {e}"])
            self.logger.info(f"{group}: {'PASS' if result.passed else 'FAIL'}")
            results.append(result)
        return results

    def check_fidelity_axioms(self) -> CheckResult:
        rng = self.rng('fidelity-axioms')
        worst_low, worst_high, worst_gap, worst_self = 0.0, 0.0, 0.0, 1.0
        law_violations = 0
        for i in range(200):
            n = 2 + i % 7
            rho, sigma = synthetic.random_density(rng, n), synthetic.random_density(rng, n)
            f_rs, f_sr = self.fidelity_fn(rho, sigma), self.fidelity_fn(sigma, rho)
            worst_low, worst_high = min(worst_low, f_rs, f_sr), max(worst_high, f_rs, f_sr)
            worst_gap = max(worst_gap, abs(f_rs - f_sr))
            worst_self = min(worst_self, self.fidelity_fn(rho, rho))
            # identity law: F >= 1 - 1e-8 iff max |rho - sigma| <= 1e-6, checked on far, equal and
            # nearly equal pairs
            tau = synthetic.random_density(rng, n)
            nudged = DensityOperator((1 - 1e-9) * rho.matrix + 1e-9 * tau.matrix)
            for a, b, f in ((rho, sigma, f_rs), (rho, rho, None), (rho, nudged, None)):
                f = self.fidelity_fn(a, b) if f is None else f
                close = float(np.max(np.abs(a.matrix - b.matrix))) <= 1e-6
                if close != (f >= 1 - 1e-8):
                    law_violations += 1
        worst_orthogonal = 0.0
        for n in range(2, 9):
            for _ in range(3):
                rho, sigma = synthetic.orthogonal_support_pair(rng, n)
                worst_orthogonal = max(worst_orthogonal, self.fidelity_fn(rho, sigma))
        passed = (worst_low >= -1e-9 and worst_high <= 1 + 1e-9 and worst_gap <= 1e-9
                  and worst_self >= 1 - 1e-8 and worst_orthogonal <= 1e-9 and law_violations == 0)
        return CheckResult('fidelity-axioms', passed, [
            f"200 pairs, dimensions 2-8: observed range [{worst_low:.3e}, {worst_high:.12f}]",
            f"symmetry gap {worst_gap:.3e}; min F(rho,rho) = 1 - {1 - worst_self:.3e}",
            f"orthogonal supports: max F {worst_orthogonal:.3e}; identity-law violations {law_violations}"])

    def check_pure_reduction(self) -> CheckResult:
        rng = self.rng('pure-reduction')
        worst, worst_transition = 0.0, 0.0
        for i in range(100):
            n = 2 + i % 7
            psi, phi = synthetic.random_pure_state(rng, n), synthetic.random_pure_state(rng, n)
            pure = float(np.dot(psi.amplitudes, phi.amplitudes)) ** 2
            worst = max(worst, abs(self.fidelity_fn(projector(psi), projector(phi)) - pure))
            sigma = synthetic.random_density(rng, n)
            quadratic = float(psi.amplitudes @ sigma.matrix @ psi.amplitudes)
            worst_transition = max(worst_transition, abs(self.fidelity_fn(projector(psi), sigma) - quadratic))
        return CheckResult('pure-reduction', worst <= 1e-8 and worst_transition <= 1e-8, [
            f"100 pairs: max |F - <psi|phi>^2| = {worst:.3e}; max |F - psi^T sigma psi| = {worst_transition:.3e}"])

    def check_encoding_roundtrip(self) -> CheckResult:
        rng = self.rng('encoding-roundtrip')
        worst = 0.0
        for i in range(100):
            x = rng.uniform(-1e6, 1e6, size=1 + i % 8)
            decoded = decode_features(amplitude_encode(x)).values
            worst = max(worst, float(np.max(np.abs(decoded - x)) / max(1.0, float(np.max(np.abs(x))))))
        return CheckResult('encoding-roundtrip', worst <= 1e-10,
                           [f"100 vectors in [-1e6, 1e6]: max relative error {worst:.3e}"])

    def check_non_transitivity(self) -> CheckResult:
        zero, plus, one = PureState.basis(0), PureState.uniform(2), PureState.basis(1)
        f_zp = settle_fidelity(self.fidelity_fn(projector(zero), projector(plus)))
        f_po = settle_fidelity(self.fidelity_fn(projector(plus), projector(one)))
        f_zo = settle_fidelity(self.fidelity_fn(projector(zero), projector(one)))
        exact = abs(f_zp - 0.5) <= 1e-12 and abs(f_po - 0.5) <= 1e-12 and abs(f_zo) <= 1e-12
        relation = (r_similar(projector(zero), projector(plus), 0.5)
                    and r_similar(projector(plus), projector(one), 0.5)
                    and not r_similar(projector(zero), projector(one), 0.5))
        return CheckResult('non-transitivity', exact and relation, [
            f"|0>, |+>, |1> at r = 0.5: F(|0>,|+>) = {f_zp:.12f}, F(|+>,|1>) = {f_po:.12f}, "
            f"F(|0>,|1>) = {f_zo:.12f}"])

    def check_classifier_oracle(self) -> CheckResult:
        rng = self.rng('classifier-oracle')
        splits = [(p, n, q) for p, n, q in itertools.product(range(1, 4), range(1, 4), range(0, 3)) if p + n + q <= 4]
        checked, checked_mixed, disagreements = 0, 0, 0
        for dimension in range(2, 5):
            for n_pos, n_neg, n_ind in splits:
                for _ in range(3):
                    ds = synthetic.random_dataset(rng, dimension, n_pos, n_neg, n_ind)
                    pair = centroids(ds)
                    positives = [p.amplitudes for p in ds.positives]
                    negatives = [n.amplitudes for n in ds.negatives]
                    queries = [synthetic.random_pure_state(rng, dimension) for _ in range(4)] + list(ds.positives[:1])
                    for psi in queries:
                        sigma = projector(psi)
                        for r in R_STAR_GRID:
                            checked += 1
                            if classify(sigma, pair, r).value != oracle_label(psi.amplitudes, positives, negatives, r):
                                disagreements += 1
                    # mixed queries take the same path as projectors
                    mixed = [synthetic.random_density(rng, dimension, rank=int(rng.integers(2, dimension + 1))),
                             pair.positive]
                    for sigma in mixed:
                        for r in R_STAR_GRID:
                            checked_mixed += 1
                            if classify(sigma, pair, r).value != oracle_mixed_label(sigma.matrix, positives, negatives, r):
                                disagreements += 1
        return CheckResult('classifier-oracle', disagreements == 0,
                           [f"{checked} pure and {checked_mixed} mixed classifications (dimensions 2-4, <= 4 states): "
                            f"{disagreements} disagreements"])

    def check_polarity_symmetry(self) -> CheckResult:
        rng = self.rng('polarity-symmetry')
        violations, checked = 0, 0
        for _ in range(20):
            dimension = int(rng.integers(2, 6))
            ds = synthetic.random_dataset(rng, dimension, int(rng.integers(1, 4)), int(rng.integers(1, 4)),
                                          int(rng.integers(0, 3)))
            pair, mirrored = centroids(ds), centroids(ds.swapped())
            for _ in range(10):
                sigma = projector(synthetic.random_pure_state(rng, dimension))
                r = float(rng.choice(R_STAR_GRID))
                checked += 1
                if classify(sigma, mirrored, r) is not classify(sigma, pair, r).swapped():
                    violations += 1
        return CheckResult('polarity-symmetry', violations == 0,
                           [f"20 data sets, {checked} queries: {violations} violations"])

    def check_music_fixtures(self) -> CheckResult:
        primary, major = load_fixture('op10n1_primary'), load_fixture('op10n1_major')
        config = EncodingConfig().resolved([primary, major])
        a, b = encode_theme(primary, config), encode_theme(major, config)
        f_rhythmic = fidelity_pure(a.rhythmic, b.rhythmic)
        f_melodic = fidelity_pure(a.melodic, b.melodic)
        modes = {mode: musical_similar(a, b, mode, 0.9) for mode in SimilarityMode}
        passed = (abs(f_rhythmic - 1.0) <= 1e-12 and f_melodic < 1.0 and modes[SimilarityMode.MELODIC]
                  and modes[SimilarityMode.RHYTHMIC] and modes[SimilarityMode.STRONG])
        return CheckResult('music-fixtures', passed, [
            f"op.10 n.1 primary theme vs major transformation: rhythmic F = {f_rhythmic:.12f}, "
            f"melodic F = {f_melodic:.6f}",
            "at r* = 0.9: " + ", ".join(f"{m.value} {'yes' if v else 'no'}" for m, v in modes.items())])

    def check_transposition_invariance(self) -> CheckResult:
        rng = self.rng('transposition-invariance')
        mismatches, checked = 0, 0
        for i in range(20):
            pitches, durations = synthetic.random_melody(rng, 8)
            reference = encode_melodic(AbstractTheme.from_pitches(f"t{i}", pitches, durations)).amplitudes
            for shift in [k for k in range(-12, 13) if k != 0]:
                moved = [None if p is None else p + shift for p in pitches]
                shifted = encode_melodic(AbstractTheme.from_pitches(f"t{i}{shift:+d}", moved, durations)).amplitudes
                checked += 1
                if not np.array_equal(reference, shifted):
                    mismatches += 1
        return CheckResult('transposition-invariance', mismatches == 0,
                           [f"20 themes x 24 shifts: {mismatches} of {checked} encodings differ"])

    def check_mcl_oracle(self) -> CheckResult:
        rng = self.rng('mcl-oracle')
        checked, disagreements = 0, 0
        for _ in range(10):
            ds, _ = synthetic.random_musical_dataset(rng, int(rng.integers(1, 4)), int(rng.integers(1, 4)),
                                                     int(rng.integers(0, 2)))
            kappa = musical_centroids(ds)
            positives = [(i.melodic.amplitudes, i.rhythmic.amplitudes) for i in ds.positives]
            negatives = [(i.melodic.amplitudes, i.rhythmic.amplitudes) for i in ds.negatives]
            queries = list(ds.ideas)
            queries += [encode_theme(synthetic.random_theme(rng, f"q{k}", 8), EncodingConfig(span=64)) for k in range(3)]
            for nu in queries:
                for mode in SimilarityMode:
                    for r in (0.55, 0.7, 0.9):
                        checked += 1
                        expected = oracle_musical_label(nu.melodic.amplitudes, nu.rhythmic.amplitudes,
                                                        positives, negatives, mode.value, r)
                        if classify_theme(nu, kappa, mode, r).value != expected:
                            disagreements += 1
        return CheckResult('mcl-oracle', disagreements == 0,
                           [f"10 musical data sets, {checked} classifications over 4 modes: "
                            f"{disagreements} disagreements"])

    @staticmethod
    def all_passed(results: List[CheckResult]) -> bool:
        return all(result.passed for result in results)

    @staticmethod
    def report(results: List[CheckResult]) -> str:
        lines = [line for result in results for line in result.lines()]
        verdict = "all checks passed" if SelfTest.all_passed(results) else \
            f"{sum(not r.passed for r in results)} of {len(results)} groups failed"
        return "\n".join(lines + [verdict]) + "\n"
