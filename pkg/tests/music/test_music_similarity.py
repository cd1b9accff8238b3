import pytest

from qgestalt.generic.exceptions import DimensionMismatchError
from qgestalt.music import (EncodingConfig, SimilarityMode, channel_fidelities, encode_theme, musical_similar,
                            parse_theme)

WITNESS = {
    'a': "meter 4/4\nnote 0 1\nnote 0 1\n",
    'b': "meter 4/4\nnote 0 2\nnote 1 1\n",
    'c': "meter 4/4\nrest 2\nnote 0 1\nnote 2 1\n",
}


@pytest.fixture
def witness():
    config = EncodingConfig(melodic_len=2, grid=1, span=4)
    return {name: encode_theme(parse_theme(text, name), config) for name, text in WITNESS.items()}


def test_witness_fidelities(witness):
    a, b, c = witness['a'], witness['b'], witness['c']
    assert channel_fidelities(a, b) == pytest.approx((0.5, 4 / 9), abs=1e-12)
    assert channel_fidelities(b, c) == pytest.approx((0.9, 4 / 9), abs=1e-12)
    assert channel_fidelities(a, c) == pytest.approx((0.2, 1 / 9), abs=1e-12)


@pytest.mark.parametrize("mode", list(SimilarityMode))
def test_musical_similarity_is_not_transitive(witness, mode):
    a, b, c = witness['a'], witness['b'], witness['c']
    assert musical_similar(a, b, mode, 0.4)
    assert musical_similar(b, c, mode, 0.4)
    assert not musical_similar(a, c, mode, 0.4)


@pytest.mark.parametrize("mode", list(SimilarityMode))
def test_reflexive_and_symmetric(witness, mode):
    a, b = witness['a'], witness['b']
    assert musical_similar(a, a, mode, 1.0)
    for r in (0.3, 0.45, 0.6):
        assert musical_similar(a, b, mode, r) == musical_similar(b, a, mode, r)


def test_modes_combine_channels():
    assert SimilarityMode.STRONG.combine(True, False) is False
    assert SimilarityMode.WEAK.combine(True, False) is True
    assert SimilarityMode.MELODIC.combine(True, False) is True
    assert SimilarityMode.RHYTHMIC.combine(True, False) is False


def test_mode_lookup():
    assert SimilarityMode.of("Strong") is SimilarityMode.STRONG
    assert SimilarityMode.of(SimilarityMode.WEAK) is SimilarityMode.WEAK
    with pytest.raises(ValueError):
        SimilarityMode.of("harmonic")


def test_strong_and_weak_at_intermediate_threshold(witness):
    """At r = 0.45 a and b are melodically (0.5) but not rhythmically (4/9) similar."""
    a, b = witness['a'], witness['b']
    assert musical_similar(a, b, SimilarityMode.WEAK, 0.45)
    assert musical_similar(a, b, SimilarityMode.MELODIC, 0.45)
    assert not musical_similar(a, b, SimilarityMode.RHYTHMIC, 0.45)
    assert not musical_similar(a, b, SimilarityMode.STRONG, 0.45)


def test_channel_dimensions_must_match(fixture_themes):
    short = encode_theme(fixture_themes['fifth_incipit'], EncodingConfig(span=16))
    long = encode_theme(fixture_themes['fifth_incipit'], EncodingConfig(span=32))
    with pytest.raises(DimensionMismatchError):
        channel_fidelities(short, long)
