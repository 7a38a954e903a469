import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linesys.quadratic import (
    QuadExt,
    parse_quad,
    rational_sqrt,
    sqrt_in_field,
    squarefree_part,
)


def test_squarefree_part():
    assert squarefree_part(0) == (0, 0)
    assert squarefree_part(1) == (1, 1)
    assert squarefree_part(8) == (2, 2)
    assert squarefree_part(9) == (3, 1)
    assert squarefree_part(45) == (3, 5)
    assert squarefree_part(2 * 3 * 5 * 7) == (1, 210)
    assert squarefree_part(97 * 97 * 101) == (97, 101)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(0) == 0
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-4)) is None


def test_normalisation():
    assert QuadExt(1, 2, 8) == QuadExt(1, 4, 2)
    assert QuadExt(3, 0, 5).m == 0
    assert QuadExt(1, 2, 9) == QuadExt(7)  # sqrt(9) = 3 folds in
    assert QuadExt.sqrt(Fraction(9, 4)) == QuadExt(Fraction(3, 2))
    assert QuadExt.sqrt(8) == QuadExt(0, 2, 2)
    assert QuadExt.sqrt(Fraction(5, 9)) == QuadExt(0, Fraction(1, 3), 5)


def test_golden_root():
    # alpha = (sqrt(5) - 1)/4 satisfies 4*alpha^2 + 2*alpha - 1 = 0
    alpha = QuadExt(Fraction(-1, 4), Fraction(1, 4), 5)
    assert 4 * alpha * alpha + 2 * alpha - 1 == QuadExt(0)
    beta = -alpha - Fraction(1, 2)
    assert beta == QuadExt(Fraction(-1, 4), Fraction(-1, 4), 5)
    assert alpha.conjugate() == QuadExt(Fraction(-1, 4), Fraction(-1, 4), 5)
    assert alpha.sign() > 0 and beta.sign() < 0


def test_sign_all_quadrants():
    assert QuadExt(3, -2, 2).sign() > 0  # 9 > 8
    assert QuadExt(-3, 2, 2).sign() < 0
    assert QuadExt(2, -3, 2).sign() < 0  # 4 < 18
    assert QuadExt(-2, 3, 2).sign() > 0
    assert QuadExt(3, -1, 9).sign() == 0  # 3 - sqrt(9) = 0 after fold
    assert QuadExt(0).sign() == 0


def test_ordering_against_float():
    rng = random.Random(7)
    for _ in range(300):
        m = rng.choice([2, 3, 5, 7])
        x = QuadExt(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)), m)
        y = QuadExt(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)), m)
        if abs(float(x) - float(y)) > 1e-9:
            assert (x < y) == (float(x) < float(y))


def test_mixed_radicand_raises():
    with pytest.raises(ValueError):
        QuadExt(0, 1, 2) + QuadExt(0, 1, 3)
    with pytest.raises(ValueError):
        QuadExt(0, 1, 2) < QuadExt(0, 1, 5)
    # rational values are compatible with everything
    assert QuadExt(2) + QuadExt(0, 1, 3) == QuadExt(2, 1, 3)
    assert QuadExt(1, 1, 7) > 2


def test_division_and_pow():
    x = QuadExt(1, 1, 2)
    assert x * x.inverse() == QuadExt(1)
    assert (x ** 5) * (x ** -5) == QuadExt(1)
    assert x ** 2 == QuadExt(3, 2, 2)
    assert 1 / QuadExt(0, 1, 5) == QuadExt(0, Fraction(1, 5), 5)
    with pytest.raises(ZeroDivisionError):
        QuadExt(0).inverse()


def test_hash_matches_rational():
    assert hash(QuadExt(Fraction(3, 4))) == hash(Fraction(3, 4))
    d = {QuadExt(Fraction(1, 2)): "x"}
    assert d[Fraction(1, 2)] == "x"


@settings(max_examples=200, deadline=None)
@given(
    st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50),
    st.integers(-50, 50), st.sampled_from([2, 3, 5, 6, 7, 10]),
)
def test_field_laws(a1, b1, a2, b2, m):
    x = QuadExt(Fraction(a1, 7), Fraction(b1, 5), m)
    y = QuadExt(Fraction(a2, 3), Fraction(b2, 11), m)
    z = QuadExt(Fraction(1, 2), Fraction(-1, 3), m)
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x - y) + y == x
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    if y != QuadExt(0):
        assert (x / y) * y == x
    # norm is multiplicative
    assert (x * y).norm() == x.norm() * y.norm()


def test_parse_roundtrip():
    cases = [
        QuadExt(Fraction(3, 5)),
        QuadExt(Fraction(-1, 4), Fraction(1, 4), 5),
        QuadExt(Fraction(-1, 4), Fraction(-1, 4), 5),
        QuadExt(0, Fraction(2, 7), 3),
        QuadExt(0, 1, 2),
        QuadExt(5),
        QuadExt(0),
    ]
    for x in cases:
        assert parse_quad(str(x)) == x


def test_parse_forms():
    assert parse_quad("1/2+3/4*sqrt(5)") == QuadExt(Fraction(1, 2), Fraction(3, 4), 5)
    assert parse_quad("-1/4 - 1/4*sqrt(5)") == QuadExt(Fraction(-1, 4), Fraction(-1, 4), 5)
    assert parse_quad("sqrt(2)/2") == QuadExt(0, Fraction(1, 2), 2)
    assert parse_quad("-sqrt(5)/3") == QuadExt(0, Fraction(-1, 3), 5)
    assert parse_quad("7") == QuadExt(7)
    assert parse_quad("2*sqrt(18)") == QuadExt(0, 6, 2)
    for bad in ["", "1+1", "sqrt(2)+sqrt(3)", "1//2", "x"]:
        with pytest.raises(ValueError):
            parse_quad(bad)


def test_sqrt_in_field():
    assert sqrt_in_field(QuadExt(3, 2, 2)) == QuadExt(1, 1, 2)
    assert sqrt_in_field(QuadExt(7, 4, 3)) == QuadExt(2, 1, 3)
    assert sqrt_in_field(QuadExt(Fraction(9, 4))) == QuadExt(Fraction(3, 2))
    assert sqrt_in_field(QuadExt(2, 1, 2)) is None
    assert sqrt_in_field(QuadExt(-1)) is None
    # 45 = (3*sqrt(5))^2 inside Q(sqrt(5)): the ambient-field hint matters
    assert sqrt_in_field(QuadExt(45)) is None
    assert sqrt_in_field(QuadExt(45), radicand=5) == QuadExt(0, 3, 5)
    assert sqrt_in_field(QuadExt(45), radicand=7) is None


def test_sqrt_in_field_random():
    rng = random.Random(11)
    for _ in range(200):
        m = rng.choice([2, 3, 5, 13])
        p = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        q = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        y = QuadExt(p, q, m)
        sq = y * y
        got = sqrt_in_field(sq, radicand=m)
        assert got is not None
        assert got * got == sq
        assert got.sign() >= 0


def test_float_and_str():
    x = QuadExt(Fraction(-1, 4), Fraction(1, 4), 5)
    assert abs(float(x) - (math.sqrt(5) - 1) / 4) < 1e-12
    assert str(x) == "-1/4+1/4*sqrt(5)"
    assert str(QuadExt(0, -1, 2)) == "-sqrt(2)"
    assert str(QuadExt(Fraction(1, 3))) == "1/3"
