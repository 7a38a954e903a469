import random
from fractions import Fraction

import pytest

from linesys.groebner import (
    BudgetExceeded,
    buchberger,
    eliminant,
    elimination_ideal,
    is_trivial_ideal,
    is_zero_dimensional,
    normal_form,
)
from linesys.polynomials import MPoly, grevlex, lex


def V(n, i):
    return MPoly.var(n, i)


def test_circle_meets_diagonal():
    x, y = V(2, 0), V(2, 1)
    gb = buchberger([x * x + y * y - 1, x - y], grevlex(2))
    # frozen expectation: {y^2 - 1/2, x - y}, larger leading term first
    assert len(gb) == 2
    assert gb[0] == y * y - Fraction(1, 2)
    assert gb[1] == x - y


def test_hyperbola_meets_circle_lex():
    x, y = V(2, 0), V(2, 1)
    gb = buchberger([x * y - 1, x * x + y * y - 4], lex(2))
    assert gb[0] == x + y ** 3 - 4 * y
    assert gb[1] == y ** 4 - 4 * y * y + 1


def test_trivial_ideal():
    x = V(2, 0)
    gb = buchberger([x, x + 1], grevlex(2))
    assert is_trivial_ideal(gb)
    gb2 = buchberger([x * x - 1], grevlex(2))
    assert not is_trivial_ideal(gb2)
    assert not is_trivial_ideal([])


def test_zero_dimensionality():
    x, y = V(2, 0), V(2, 1)
    order = grevlex(2)
    assert is_zero_dimensional(buchberger([x * x - 1, y ** 3 - y], order), order, 2)
    assert not is_zero_dimensional(buchberger([x * y - 1], order), order, 2)
    assert not is_zero_dimensional(buchberger([x * x - y * y], order), order, 2)
    assert is_zero_dimensional(buchberger([x, x + 1], order), order, 2)


def test_eliminant():
    x, y = V(2, 0), V(2, 1)
    gens = [x * x - y, y * y - x]
    ex = eliminant(gens, 0, 2)
    assert ex == x ** 4 - x
    ey = eliminant(gens, 1, 2)
    assert ey == y ** 4 - y
    # positive-dimensional: no univariate relation
    assert eliminant([x * x - y * y], 0, 2).is_zero


def test_elimination_ideal():
    # project V(x - 2y + 1, z - x*y) onto (x, y): drop z
    x, y, z = V(3, 0), V(3, 1), V(3, 2)
    rels = elimination_ideal([x - 2 * y + 1, z - x * y], {2}, 3)
    assert len(rels) == 1
    assert rels[0] == x - 2 * y + 1


def test_budget_exceeded():
    x, y = V(2, 0), V(2, 1)
    with pytest.raises(BudgetExceeded):
        buchberger([x * y - 1, x * x + y * y - 4], grevlex(2), budget=0)


def test_normal_form_membership():
    x, y = V(2, 0), V(2, 1)
    order = grevlex(2)
    gb = buchberger([x * x + y * y - 1, x - y], order)
    # an element of the ideal reduces to zero
    member = (x * x + y * y - 1) * (x + 3) + (x - y) * (y ** 2 - 7)
    assert normal_form(member, gb, order).is_zero
    assert not normal_form(x + y, gb, order).is_zero


def test_order_independence():
    # same ideal from different orders: mutual reduction to zero both ways
    x, y = V(2, 0), V(2, 1)
    gens = [x ** 2 - 2 * y ** 2 + 1, x * y - 3]
    g1 = buchberger(gens, grevlex(2))
    g2 = buchberger(gens, lex(2))
    for g in g1:
        assert normal_form(g, g2, lex(2)).is_zero
    for g in g2:
        assert normal_form(g, g1, grevlex(2)).is_zero


def test_random_ideal_membership_property():
    # the reduced basis must reduce every generator and random combinations to 0
    rng = random.Random(17)
    for _ in range(20):
        n = 2
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = MPoly(n)
            for _ in range(rng.randint(1, 4)):
                e = (rng.randint(0, 2), rng.randint(0, 2))
                p = p + MPoly(n, {e: Fraction(rng.randint(-3, 3))})
            if not p.is_zero:
                gens.append(p)
        if not gens:
            continue
        order = grevlex(n)
        gb = buchberger(gens, order)
        if not gb:
            continue
        for g in gens:
            assert normal_form(g, gb, order).is_zero
        combo = MPoly(n)
        for g in gens:
            mult = MPoly(n, {(rng.randint(0, 1), rng.randint(0, 1)): Fraction(rng.randint(-2, 2))})
            combo = combo + mult * g
        assert normal_form(combo, gb, order).is_zero


def test_reduced_basis_is_canonical():
    # the reduced GB of an ideal is unique: shuffled generators agree
    x, y = V(2, 0), V(2, 1)
    gens = [x ** 2 + y - 1, x * y + x - 2, y ** 2 - y]
    order = grevlex(2)
    ref = buchberger(gens, order)
    rng = random.Random(3)
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        scaled = [Fraction(rng.randint(1, 5)) * g for g in shuffled]
        assert buchberger(scaled, order) == ref
