from fractions import Fraction

import numpy as np
import pytest

from linesys.leech import (
    SCALE,
    _cyclic_generator,
    _gf2_mod,
    _shortest_array,
    golay_and_leech,
    golay_code,
    leech_cross_sections,
)

BIANGULAR_THIRD = {Fraction(0), Fraction(1, 3), Fraction(-1, 3)}


def test_gf2_division():
    # x^3+1 = (x+1)(x^2+x+1)
    assert _gf2_mod(0b1001, 0b11) == 0
    assert _gf2_mod(0b1001, 0b111) == 0
    assert _gf2_mod(0b1011, 0b11) != 0


def test_cyclic_generator_divides():
    g = _cyclic_generator()
    assert g.bit_length() == 12  # degree 11
    assert _gf2_mod((1 << 23) | 1, g) == 0


def test_golay_parameters():
    code = golay_code()
    assert code.length == 24
    assert code.size == 4096
    weights = [sum(w) for w in code.words]
    assert sorted(set(weights)) == [0, 8, 12, 16, 24]
    assert weights.count(8) == 759
    assert weights.count(12) == 2576
    # linear code: minimum distance = minimum nonzero weight
    assert min(w for w in weights if w) == 8


def test_shortest_vector_count_and_norms():
    X = _shortest_array()
    assert X.shape == (196560, 24)
    assert ((X.astype(np.int32) ** 2).sum(axis=1) == SCALE).all()


def test_inner_product_values_on_random_sample():
    X = _shortest_array().astype(np.int32)
    rng = np.random.default_rng(5237)
    sample = X[rng.integers(0, X.shape[0], size=400)]
    products = sample @ X.T
    assert set(np.unique(products).tolist()) <= {0, 8, -8, 16, -16, 32, -32}


def test_hyperplane_section_size():
    X = _shortest_array().astype(np.int32)
    ell = np.zeros(24, dtype=np.int32)
    ell[0] = ell[1] = 4
    assert int((X @ ell == 16).sum()) == 4600


def test_golay_and_leech_shapes():
    both = golay_and_leech()
    assert both["golay"].size == 4096
    assert both["leech_shortest"].n == 196560
    assert both["leech_shortest"].scale == SCALE


def test_cross_section_counts_and_ranks():
    sections = leech_cross_sections()
    assert {(s.n, s.d) for s in sections.values()} == {
        (2300, 23), (1408, 22), (896, 21)}
    for s in sections.values():
        assert set(s.angles) <= BIANGULAR_THIRD


def test_cross_sections_verify_stated_claims():
    from linesys.solve import verify_system

    sections = leech_cross_sections()
    for d, n in ((23, 2300), (22, 1408), (21, 896)):
        report = verify_system(sections[d],
                               {"n": n, "d": d, "angles_subset": BIANGULAR_THIRD,
                                "m_angular": 2})
        assert report.ok, report.to_json()


def test_runs_are_memoized_and_deterministic():
    first = leech_cross_sections()
    second = leech_cross_sections()
    assert first is second
