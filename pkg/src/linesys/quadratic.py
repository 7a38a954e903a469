"""Exact arithmetic in real quadratic extensions Q(sqrt(m)).

Every number is represented as a + b*sqrt(m) with rational a, b and a
squarefree nonnegative integer radicand m.  Purely rational values are
normalised to m = 0, so equality and hashing are field-independent for
rationals.  Arithmetic between two irrational values is only defined when
their radicands agree; mixing distinct radicands raises ValueError rather
than silently promoting to a biquadratic field.

Ordering is exact.  The sign of a + b*sqrt(m) is decided by comparing a*a
against b*b*m when a and b have opposite signs, so no floating point is
involved anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering

Rat = Fraction

def squarefree_part(n: int) -> tuple[int, int]:
    """Split n >= 0 as s*s*m with m squarefree; returns (s, m)."""
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n in (0, 1):
        return (1, n) if n else (0, 0)
    s, m = 1, 1
    p = 2
    # Trial-divide up to the cube root; what survives has at most two prime
    # factors, so a single perfect-square test finishes the job.
    while p * p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e & 1:
                m *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(n)
    if r * r == n:
        s *= r
    else:
        m *= n
    return s, m


def rational_sqrt(q: Rat | int) -> Rat | None:
    """Exact square root of a rational, or None if q is not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    pn, pd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if pn * pn == q.numerator and pd * pd == q.denominator:
        return Fraction(pn, pd)
    return None


@total_ordering
class QuadExt:
    """An element a + b*sqrt(m) of a real quadratic field, exact."""

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b=0, m: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        m = int(m)
        if m < 0:
            raise ValueError("negative radicand: only real fields are supported")
        if m in (0, 1):
            a, b, m = a + b * m, Fraction(0), 0
        elif b == 0:
            m = 0
        else:
            s, core = squarefree_part(m)
            if core in (0, 1):
                a, b, m = a + b * s * core, Fraction(0), 0
            else:
                b, m = b * s, core
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def sqrt(cls, q) -> "QuadExt":
        """Exact square root of a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        # sqrt(p/q) = sqrt(p*q)/q
        s, m = squarefree_part(q.numerator * q.denominator)
        return cls(0, Fraction(s, q.denominator), m)

    # -- basic queries -----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Rat:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.m)

    def norm(self) -> Rat:
        """Field norm a*a - m*b*b (product with the conjugate)."""
        return self.a * self.a - self.b * self.b * self.m

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Opposite signs: |a| vs |b|*sqrt(m) decides, squared.
        lhs, rhs = a * a, b * b * self.m
        if lhs == rhs:
            return 0
        big_is_a = lhs > rhs
        return 1 if (a > 0) == big_is_a else -1

    # -- coercion helpers --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return None

    def _join(self, other: "QuadExt") -> int:
        """Common radicand for an arithmetic op, or raise."""
        if self.m == other.m or other.m == 0:
            return self.m
        if self.m == 0:
            return other.m
        raise ValueError(
            f"incompatible radicands sqrt({self.m}) and sqrt({other.m})"
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = self._join(other)
        return QuadExt(self.a + other.a, self.b + other.b, m)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = self._join(other)
        a = self.a * other.a + self.b * other.b * m
        b = self.a * other.b + self.b * other.a
        return QuadExt(a, b, m)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadExt(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.a, self.b, self.m) == (other.a, other.b, other.m)

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._join(other)  # raise early on incomparable radicands
        return (self - other).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- conversion / display ----------------------------------------------

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.m})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.m})"
        if self.b == 1:
            tail = root
        elif self.b == -1:
            tail = "-" + root
        else:
            tail = f"{self.b}*{root}"
        if self.a == 0:
            return tail
        sign = "+" if self.b > 0 else ""
        return f"{self.a}{sign}{tail}"


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
          (?P<coef>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<m1>\d+)\s*\)
          (?:\s*/\s*(?P<den1>\d+))?
        | sqrt\(\s*(?P<m2>\d+)\s*\)(?:\s*/\s*(?P<den2>\d+))?
        | (?P<rat>\d+(?:/\d+)?)
        )\s*""",
    re.VERBOSE,
)


def parse_quad(text: str) -> QuadExt:
    """Parse "p/q", "p/q+r/s*sqrt(m)", "sqrt(m)/2", "-1/4-1/4*sqrt(5)" etc.

    The grammar is a signed sum of at most one rational term and at most one
    sqrt term; whitespace is ignored.
    """
    pos, total = 0, QuadExt(0)
    seen_rat = seen_root = False
    s = text.strip()
    if not s:
        raise ValueError("empty number")
    while pos < len(s):
        mobj = _TERM_RE.match(s, pos)
        if not mobj:
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        if pos > 0 and mobj.group("sign") == "":
            raise ValueError(f"missing sign between terms in {text!r}")
        sgn = -1 if mobj.group("sign") == "-" else 1
        if mobj.group("rat") is not None:
            if seen_rat:
                raise ValueError(f"two rational terms in {text!r}")
            seen_rat = True
            total = total + sgn * Fraction(mobj.group("rat"))
        else:
            if seen_root:
                raise ValueError(f"two sqrt terms in {text!r}")
            seen_root = True
            if mobj.group("m1") is not None:
                coef = Fraction(mobj.group("coef"))
                if mobj.group("den1"):
                    coef /= int(mobj.group("den1"))
                rad = int(mobj.group("m1"))
            else:
                coef = Fraction(1)
                if mobj.group("den2"):
                    coef /= int(mobj.group("den2"))
                rad = int(mobj.group("m2"))
            total = total + QuadExt(0, sgn * coef, rad)
        pos = mobj.end()
    return total


def sqrt_in_field(x: QuadExt, radicand: int = 0) -> QuadExt | None:
    """A y in Q(sqrt(m)) with y*y == x, or None if x is not a square there.

    The ambient field is Q(sqrt(m)) where m is x's radicand, or `radicand`
    when x happens to be rational (normalisation drops the field tag from
    rational values, so callers working inside a fixed field pass it back in).

    Solves (p + q*sqrt(m))^2 = a + b*sqrt(m) over the rationals:
    p*p + m*q*q = a and 2*p*q = b, which reduces to a rational-square test on
    the discriminant a*a - m*b*b and on (a +- w)/2.
    """
    if x.sign() < 0:
        return None
    a, b, m = x.a, x.b, x.m
    if b == 0:
        r = rational_sqrt(a)
        if r is not None:
            return QuadExt(r)
        if m == 0:
            m = radicand
        if m:
            # maybe a = m*q*q, i.e. sqrt(a) = q*sqrt(m)
            r = rational_sqrt(a / m)
            if r is not None:
                return QuadExt(0, r, m)
        return None
    w = rational_sqrt(a * a - m * b * b)
    if w is None:
        return None
    for ww in (w, -w):
        p2 = (a + ww) / 2
        p = rational_sqrt(p2)
        if p is not None and p != 0:
            q = b / (2 * p)
            cand = QuadExt(p, q, m)
            if cand * cand == x:
                return cand if cand.sign() >= 0 else -cand
    return None
