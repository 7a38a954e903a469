"""Univariate factoring over Q, just enough for minimal polynomials of angles.

Coefficient lists are ascending: [c0, c1, ..., cn] ~ c0 + c1*x + ... + cn*x^n
with Fraction entries.  The pipeline is Yun's squarefree decomposition, then
rational roots by the rational-root theorem, then integer quadratic factors
by bounded trial division.  Anything of degree >= 3 that survives is returned
unsplit together with isolating intervals from a Sturm chain; callers treat
those roots as "present but not expressible in a quadratic field".
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .polynomials import poly_gcd_univariate
from .quadratic import QuadExt

Coeffs = list[Fraction]


def _norm(p: Coeffs) -> Coeffs:
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Coeffs) -> int:
    return len(p) - 1


def poly_eval(p: Coeffs, x):
    out = 0
    for c in reversed(p):
        out = out * x + c
    return out


def poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _norm(out)


def poly_divmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    a, b = list(a), list(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for j, cb in enumerate(b):
            a[k + j] -= f * cb
        _norm(a)
    return _norm(q), a


def derivative(p: Coeffs) -> Coeffs:
    return [c * i for i, c in enumerate(p)][1:]


def primitive_integer(p: Coeffs) -> tuple[list[int], Fraction]:
    """Rescale to coprime integers with positive leading coefficient."""
    if not p:
        return [], Fraction(1)
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if ints[-1] < 0:
        g = -g
    ints = [v // g for v in ints]
    return ints, Fraction(g, den)


def yun_squarefree(p: Coeffs) -> list[tuple[Coeffs, int]]:
    """Squarefree decomposition p = unit * prod g_i^i (only nontrivial g_i)."""
    p = _norm(list(p))
    if degree(p) < 1:
        return []
    out = []
    g = poly_gcd_univariate(p, derivative(p))
    w, _ = poly_divmod(p, g)
    y, _ = poly_divmod(derivative(p), g)
    i = 1
    # w carries the product of distinct factors; peel multiplicities
    z = [c - d for c, d in itertools.zip_longest(y, derivative(w), fillvalue=Fraction(0))]
    _norm(z)
    while degree(w) >= 1:
        h = poly_gcd_univariate(w, z)
        if degree(h) >= 1:
            out.append((h, i))
        w2, _ = poly_divmod(w, h)
        y2, _ = poly_divmod(z, h)
        w = w2
        z = [c - d for c, d in itertools.zip_longest(y2, derivative(w), fillvalue=Fraction(0))]
        _norm(z)
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def rational_roots(p: Coeffs) -> list[Fraction]:
    """Distinct rational roots (no multiplicities) of a nonzero polynomial."""
    ints, _ = primitive_integer(_norm(list(p)))
    roots = []
    while ints and ints[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return roots
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and poly_eval([Fraction(v) for v in ints], cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _root_bound(ints: list[int]) -> Fraction:
    lead = abs(ints[-1])
    return 1 + max(Fraction(abs(c), lead) for c in ints[:-1]) if len(ints) > 1 else Fraction(1)


def quadratic_factors(p: Coeffs) -> list[tuple[Coeffs, Coeffs]]:
    """Split off integer quadratic factors by trial division.

    Returns (factor, cofactor) pairs greedily: call on a squarefree
    polynomial with no rational roots; every returned quadratic is then
    irreducible over Q.
    """
    ints, _ = primitive_integer(_norm(list(p)))
    if len(ints) < 3:
        return []
    bound = _root_bound(ints)
    found = []
    work = [Fraction(v) for v in ints]
    changed = True
    while changed and degree(work) >= 2:
        changed = False
        wints, _ = primitive_integer(work)
        c1_cap = None
        for c2 in _divisors(wints[-1]):
            for c0_abs in _divisors(wints[0]) if wints[0] else [0]:
                for c0 in ({0} if c0_abs == 0 else {c0_abs, -c0_abs}):
                    c1_cap = int(2 * bound * c2) + 1
                    for c1 in range(-c1_cap, c1_cap + 1):
                        cand = [Fraction(c0), Fraction(c1), Fraction(c2)]
                        q, r = poly_divmod(work, cand)
                        if not r:
                            found.append((cand, q))
                            work = q
                            changed = True
                            break
                    if changed:
                        break
                if changed:
                    break
            if changed:
                break
    return found


def sturm_chain(p: Coeffs) -> list[Coeffs]:
    chain = [_norm(list(p)), derivative(p)]
    while degree(chain[-1]) >= 0 and chain[-1]:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[Coeffs], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = poly_eval(q, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Coeffs, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi], for squarefree p."""
    chain = sturm_chain(p)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def isolate_real_roots(p: Coeffs) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals each holding exactly one real root."""
    p = _norm(list(p))
    if degree(p) < 1:
        return []
    ints, _ = primitive_integer(p)
    b = _root_bound(ints)
    chain = sturm_chain(p)
    out = []

    def rec(lo, hi, n):
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        while poly_eval(p, mid) == 0:
            mid = (lo + mid) / 2
        left = _sign_changes(chain, lo) - _sign_changes(chain, mid)
        rec(lo, mid, left)
        rec(mid, hi, n - left)

    total = _sign_changes(chain, -b) - _sign_changes(chain, b)
    rec(-b, b, total)
    return out


@dataclass
class Factorisation:
    """Roots of a rational univariate polynomial, exact where possible."""

    rational: list[tuple[Fraction, int]] = field(default_factory=list)
    quadratic: list[tuple[Coeffs, int]] = field(default_factory=list)
    residual: list[tuple[Coeffs, int]] = field(default_factory=list)

    def real_quadratic_roots(self) -> list[tuple[QuadExt, int]]:
        """Real roots of the quadratic factors as exact field elements."""
        out = []
        for (c0, c1, c2), mult in self.quadratic:
            disc = c1 * c1 - 4 * c0 * c2
            if disc < 0:
                continue
            half = QuadExt.sqrt(disc) * Fraction(1, 2) / c2
            centre = Fraction(-c1, 2 * c2)
            out.append((QuadExt(centre) + half, mult))
            out.append((QuadExt(centre) - half, mult))
        return out

    def all_real_roots(self) -> list[tuple[QuadExt, int]]:
        roots = [(QuadExt(r), m) for r, m in self.rational]
        roots.extend(self.real_quadratic_roots())
        return roots

    @property
    def fully_split(self) -> bool:
        return not self.residual


def factor_polynomial(p: Coeffs) -> Factorisation:
    """Factor over Q into linear/quadratic pieces, flagging what resists."""
    res = Factorisation()
    for g, mult in yun_squarefree(p):
        g = list(g)
        for r in rational_roots(g):
            res.rational.append((r, mult))
            g, rem = poly_divmod(g, [-r, Fraction(1)])
            assert not rem
        if degree(g) >= 2:
            for quad, cofactor in quadratic_factors(g):
                res.quadratic.append((quad, mult))
                g = cofactor
        if degree(g) >= 1:
            res.residual.append((g, mult))
    return res
