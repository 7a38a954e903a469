"""Sparse multivariate polynomials over the rationals.

Polynomials are dictionaries mapping exponent tuples to nonzero Fraction
coefficients.  The arity is fixed per polynomial and operations never mix
arities.  Two term orders are provided: graded reverse lexicographic (the
workhorse for ideal-membership verdicts) and lexicographic with an explicit
variable priority (used to eliminate all variables except one).

Determinants of symbolic matrices come in two flavours: expansion by minors
for tiny matrices and fraction-free Bareiss elimination for anything larger.
Bareiss needs exact polynomial division, which `MPoly.divexact` supplies by
leading-term elimination (valid in any compatible order when the division is
exact).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class TermOrder:
    """A monomial order given by a sort key on exponent tuples."""

    def __init__(self, name: str, keyfn):
        self.name = name
        self.key = keyfn

    def __repr__(self):
        return f"TermOrder({self.name})"


def grevlex(n: int) -> TermOrder:
    def key(exp):
        return (sum(exp), tuple(-e for e in reversed(exp)))
    return TermOrder(f"grevlex/{n}", key)


def block_first(n: int, first: int) -> TermOrder:
    """Eliminate variable `first` ahead of a grevlex block on the others.

    The cheap way to run a saturation: the auxiliary variable is compared
    before anything else, the remaining variables keep the fast graded
    order.
    """
    rest = [i for i in range(n) if i != first]

    def key(exp):
        tail = tuple(exp[i] for i in rest)
        return (exp[first], sum(tail), tuple(-e for e in reversed(tail)))
    return TermOrder(f"block/{n}/{first}", key)


def lex(n: int, priority: Sequence[int] | None = None) -> TermOrder:
    """Lexicographic order; `priority` lists variables most-significant first.

    Eliminating everything except variable i is done with a priority that puts
    i last, so every other variable is "bigger" and gets solved away.
    """
    if priority is None:
        priority = tuple(range(n))
    else:
        priority = tuple(priority)
        if sorted(priority) != list(range(n)):
            raise ValueError(f"priority {priority} is not a permutation of 0..{n - 1}")

    def key(exp):
        return tuple(exp[i] for i in priority)
    return TermOrder(f"lex/{n}/{priority}", key)


class MPoly:
    """Immutable-by-convention sparse polynomial in n variables over Q."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: dict | None = None):
        self.n = n
        self.c = {}
        if coeffs:
            for exp, q in coeffs.items():
                q = Fraction(q)
                if q:
                    self.c[tuple(exp)] = q

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, n: int, q) -> "MPoly":
        p = cls(n)
        q = Fraction(q)
        if q:
            p.c[(0,) * n] = q
        return p

    @classmethod
    def var(cls, n: int, i: int) -> "MPoly":
        exp = [0] * n
        exp[i] = 1
        return cls(n, {tuple(exp): Fraction(1)})

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.c

    @property
    def is_constant(self) -> bool:
        return not self.c or (len(self.c) == 1 and (0,) * self.n in self.c)

    def constant_value(self) -> Fraction:
        if not self.c:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return self.c[(0,) * self.n]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.c), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.c), default=-1)

    def variables_used(self) -> set[int]:
        used = set()
        for e in self.c:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return used

    def leading(self, order: TermOrder) -> tuple[tuple, Fraction]:
        exp = max(self.c, key=order.key)
        return exp, self.c[exp]

    def key_repr(self) -> tuple:
        """Hashable canonical content, for caching and equality in sets."""
        return (self.n, tuple(sorted(self.c.items())))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MPoly"):
        if self.n != other.n:
            raise ValueError("arity mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.n, other)
        self._check(other)
        out = dict(self.c)
        for e, q in other.c.items():
            s = out.get(e, Fraction(0)) + q
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = MPoly(self.n)
        p.c = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly(self.n)
        p.c = {e: -q for e, q in self.c.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q0 = Fraction(other)
            p = MPoly(self.n)
            if q0:
                p.c = {e: q * q0 for e, q in self.c.items()}
            return p
        self._check(other)
        out: dict = {}
        small, big = (self.c, other.c) if len(self.c) <= len(other.c) else (other.c, self.c)
        for e1, q1 in small.items():
            for e2, q2 in big.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                s = q1 * q2 if s is None else s + q1 * q2
                if s:
                    out[e] = s
                else:
                    del out[e]
        p = MPoly(self.n)
        p.c = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.n, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        return hash(self.key_repr())

    # -- substitution and evaluation ---------------------------------------

    def evaluate(self, values: Sequence):
        """Full evaluation; works over any ring with +,* and Fraction coercion."""
        total = None
        for e, q in self.c.items():
            term = q
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * values[i]
            total = term if total is None else total + term
        return 0 if total is None else total

    def subst(self, i: int, value: "MPoly") -> "MPoly":
        """Substitute polynomial `value` for variable i."""
        self._check(value)
        powers = {0: MPoly.const(self.n, 1)}
        out = MPoly(self.n)
        for e, q in self.c.items():
            k = e[i]
            if k not in powers:
                powers[k] = value ** k
            rest = list(e)
            rest[i] = 0
            out = out + MPoly(self.n, {tuple(rest): q}) * powers[k]
        return out

    # -- exact division ----------------------------------------------------

    def divexact(self, g: "MPoly") -> "MPoly | None":
        """Quotient self/g if g divides exactly, else None."""
        self._check(g)
        if g.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return MPoly(self.n)
        order = grevlex(self.n)
        ge, gq = g.leading(order)
        quot = MPoly(self.n)
        rem = self
        while not rem.is_zero:
            re, rq = rem.leading(order)
            de = tuple(a - b for a, b in zip(re, ge))
            if any(x < 0 for x in de):
                return None
            t = MPoly(self.n, {de: rq / gq})
            quot = quot + t
            rem = rem - t * g
        return quot

    # -- calculus / integer scaling -----------------------------------------

    def derivative(self, i: int) -> "MPoly":
        out = MPoly(self.n)
        for e, q in self.c.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out.c[tuple(e2)] = q * e[i]
        return out

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if self.is_zero:
            return Fraction(1)
        from math import gcd
        num = 0
        den = 1
        for q in self.c.values():
            num = gcd(num, q.numerator)
            den = den * q.denominator // gcd(den, q.denominator)
        return Fraction(num, den)

    def primitive(self) -> "MPoly":
        return self * (1 / self.content())

    def monic(self, order: TermOrder) -> "MPoly":
        _, q = self.leading(order)
        return self * (1 / q)

    # -- display -----------------------------------------------------------

    def to_string(self, names: Sequence[str]) -> str:
        if not self.c:
            return "0"
        order = grevlex(self.n)
        bits = []
        for e in sorted(self.c, key=order.key, reverse=True):
            q = self.c[e]
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}")
                for i, k in enumerate(e) if k
            )
            if not mono:
                bits.append(str(q))
            elif q == 1:
                bits.append(mono)
            elif q == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{q}*{mono}")
        out = bits[0]
        for b in bits[1:]:
            out += b if b.startswith("-") else "+" + b
        return out

    def __repr__(self):
        return self.to_string([f"x{i}" for i in range(self.n)])


# -- univariate helpers ------------------------------------------------------


def univariate_coeffs(p: MPoly, i: int) -> list[Fraction]:
    """Coefficient list [c0, c1, ...] of p viewed in variable i only.

    Raises if p involves any other variable.
    """
    used = p.variables_used()
    if used - {i}:
        raise ValueError(f"polynomial is not univariate in variable {i}")
    out = [Fraction(0)] * (p.degree_in(i) + 1)
    for e, q in p.c.items():
        out[e[i]] = q
    return out


def poly_gcd_univariate(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of two univariate coefficient lists over Q."""
    def norm(u):
        while u and u[-1] == 0:
            u.pop()
        return u

    a, b = norm(list(a)), norm(list(b))
    while b:
        # a mod b
        while len(a) >= len(b):
            f = a[-1] / b[-1]
            k = len(a) - len(b)
            for j, bq in enumerate(b):
                a[k + j] -= f * bq
            norm(a)
            if not a:
                break
        a, b = b, a
    if a:
        lead = a[-1]
        a = [q / lead for q in a]
    return a


# -- symbolic determinants ---------------------------------------------------


def det_cofactor(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    n = len(rows)
    arity = rows[0][0].n
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    det = MPoly(arity)
    sign = 1
    for j in range(n):
        if not rows[0][j].is_zero:
            minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
            det = det + sign * rows[0][j] * det_cofactor(minor)
        sign = -sign
    return det


def det_bareiss(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    n = len(rows)
    arity = rows[0][0].n
    a = [list(r) for r in rows]
    sign = 1
    prev = MPoly.const(arity, 1)
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return MPoly(arity)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                q = num.divexact(prev)
                if q is None:  # pragma: no cover - Bareiss guarantees exactness
                    raise ArithmeticError("inexact division in Bareiss elimination")
                a[i][j] = q
            a[i][k] = MPoly(arity)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def det_poly(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    """Determinant of a square symbolic matrix, picking a sensible algorithm."""
    return det_cofactor(rows) if len(rows) <= 4 else det_bareiss(rows)
