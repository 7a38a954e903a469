"""Cardinality bounds for biangular line systems.

The absolute bound, the relative bound with its equality bookkeeping and
the pair-count integrality test, the inner-product integrality theorem,
Gegenbauer design-sum checks, and the best-known table.  All arithmetic
is exact; irrational angles are fine as quadratic-extension values.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .quadratic import QuadExt

# best known numbers of biangular lines by dimension (2..35); asterisk
# dimensions, where the count is known to be optimal, carry True
_BEST = {2: 5, 3: 10, 4: 12, 5: 24, 6: 40, 7: 72, 8: 126, 9: 240, 10: 256,
         11: 276, 12: 296, 13: 336, 14: 392, 15: 456, 16: 576,
         17: 816, 18: 816, 19: 816, 20: 816,
         21: 896, 22: 1408}
_BEST.update({d: 2300 for d in range(23, 36)})
_EXACT_DIMS = frozenset({2, 3, 4, 5, 6})


def absolute_bound(d: int) -> int:
    """No more than C(d+3, 4) biangular lines fit in dimension d."""
    if d < 1:
        raise ValueError("dimension must be positive")
    return comb(d + 3, 4)


@dataclass
class BestKnown:
    d: int
    count: int
    exact: bool


def best_known(d: int) -> BestKnown:
    if d < 2:
        raise ValueError("table starts at dimension 2")
    if d in _BEST:
        return BestKnown(d, _BEST[d], d in _EXACT_DIMS)
    return BestKnown(d, 2 * (d - 1) * (d - 2), False)


# -- the relative bound -------------------------------------------------------------


def _exact(v):
    if isinstance(v, QuadExt):
        return v
    return Fraction(v)


def _is_integer(v) -> bool:
    if isinstance(v, QuadExt):
        if not v.is_rational:
            return False
        v = v.as_fraction()
    return Fraction(v).denominator == 1


@dataclass
class RelativeBoundReport:
    d: int
    alpha: object
    beta: object
    denominator: object
    applicable: bool                 # denominator positive
    sum_condition: bool              # alpha^2 + beta^2 <= 6/(d+4)
    bound: object = None             # only when applicable
    n: int | None = None
    equality: bool | None = None     # n == bound
    n_alpha: object = None           # solved from the first equality condition
    n_alpha_integral: bool | None = None
    n_alpha_nonnegative: bool | None = None
    second_condition: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def feasible(self) -> bool | None:
        """Integrality screen: equality with a fractional or negative
        pair count is impossible."""
        if self.n_alpha_integral is None:
            return None
        return self.n_alpha_integral and bool(self.n_alpha_nonnegative)


def relative_bound(d: int, alpha, beta, n: int | None = None) -> RelativeBoundReport:
    """The biangular bound d(d+2)(1-a^2)(1-b^2) / (3-(d+2)(a^2+b^2)+d(d+2)a^2 b^2).

    With a claimed cardinality n the two equality conditions are put to
    work: the first is solved for the number n_alpha of ordered pairs
    meeting at cosine +-alpha (which must be a nonnegative integer for n
    to be attainable with equality), and the second is then checked
    against that value.  alpha = beta degrades to the equiangular case,
    where n_alpha is undetermined and only the residual condition is
    evaluated.
    """
    if d < 3:
        raise ValueError("relative bound needs dimension at least 3")
    alpha, beta = _exact(alpha), _exact(beta)
    if alpha < 0 or beta < 0 or not alpha < 1 or not beta < 1:
        raise ValueError("angles must lie in [0, 1)")
    a2, b2 = alpha * alpha, beta * beta
    den = 3 - (d + 2) * (a2 + b2) + d * (d + 2) * a2 * b2
    report = RelativeBoundReport(
        d=d, alpha=alpha, beta=beta, denominator=den,
        applicable=den > 0,
        sum_condition=a2 + b2 <= Fraction(6, d + 4),
        n=n)
    if not report.applicable:
        report.notes.append("denominator not positive; bound does not apply")
        return report
    report.bound = d * (d + 2) * (1 - a2) * (1 - b2) / den
    if n is None:
        return report
    report.equality = report.bound == n
    factor = Fraction(6, d + 4) - a2 - b2
    residual = n * (n - 1) * b2 + n - Fraction(n * n, d)
    if factor == 0:
        report.notes.append("boundary case alpha^2+beta^2 = 6/(d+4); the "
                            "first equality condition is vacuous")
        return report
    if a2 == b2:
        report.second_condition = (
            0 == Fraction(n * (d * d + 3 * n - 4), (d + 2) * (d + 4))
            - n * (n - 1) * b2 * (Fraction(6, d + 4) - b2))
        if residual != 0:
            report.notes.append("equiangular residual condition fails; "
                                "equality impossible")
        return report
    report.n_alpha = -residual / (a2 - b2)
    report.n_alpha_integral = _is_integer(report.n_alpha)
    report.n_alpha_nonnegative = report.n_alpha >= 0
    lhs = factor * (a2 - b2) * report.n_alpha
    rhs = (Fraction(n * (d * d + 3 * n - 4), (d + 2) * (d + 4))
           - n * (n - 1) * b2 * (Fraction(6, d + 4) - b2))
    report.second_condition = lhs == rhs
    return report


# -- inner-product integrality ------------------------------------------------------


def _floor_half_plus_sqrt(num: int, den: int) -> int:
    """floor(1/2 + sqrt(num/den)) for positive integers, exactly."""
    c = (isqrt(4 * num // den) + 1) // 2 + 1
    while c > 0 and (2 * c - 1) ** 2 * den > 4 * num:
        c -= 1
    return c


def z_integrality(d: int, alpha, beta) -> dict:
    """The quantity z = (1-a^2)/(b^2-a^2) and its integer cap.

    In a largest biangular system in dimension d >= 5 with cosines
    0 <= a < b < 1, z is an integer of size at most
    floor(1/2 + sqrt((d^2+d+2)(d^2+d-1)/(4d^2+4d-8))).
    """
    if d < 5:
        raise ValueError("the integrality theorem starts at dimension 5")
    alpha, beta = _exact(alpha), _exact(beta)
    if alpha < 0 or not alpha < beta or not beta < 1:
        raise ValueError("need 0 <= alpha < beta < 1")
    a2, b2 = alpha * alpha, beta * beta
    z = (1 - a2) / (b2 - a2)
    cap = _floor_half_plus_sqrt((d * d + d + 2) * (d * d + d - 1),
                                4 * d * d + 4 * d - 8)
    return {"z": z, "integer": _is_integer(z), "cap": cap,
            "within": _is_integer(z) and z <= cap}


# -- Gegenbauer design sums ---------------------------------------------------------


def _gegenbauer_value(k: int, lam: Fraction, z):
    if k == 0:
        return Fraction(1)
    if lam == 0:
        # dimension 2: the Chebyshev limit of the Gegenbauer family
        prev, cur = Fraction(1), z
        for _ in range(k - 1):
            prev, cur = cur, 2 * z * cur - prev
        return cur
    prev, cur = Fraction(1), 2 * lam * z
    for i in range(2, k + 1):
        prev, cur = cur, (2 * (i - 1 + lam) * z * cur - (i - 2 + 2 * lam) * prev) / i
    return cur


def design_sum_check(system, orders=(2, 4)) -> dict:
    """Which Gegenbauer sums vanish on the antipodal double of a system.

    For even order k the sum over the 2n-vector double is four times the
    sum of C_k((d-2)/2) over all ordered Gram pairs including the
    diagonal, so vanishing is decided on the Gram matrix directly; the
    verdict does not depend on the normalization of the polynomials.
    """
    lam = Fraction(system.d - 2, 2)
    gram = system.gram
    n = system.n
    out = {}
    for k in orders:
        if k % 2:
            raise ValueError("odd-order sums vanish identically on a double")
        total = 0
        for i in range(n):
            total += _gegenbauer_value(k, lam, Fraction(1))
            for j in range(i):
                total += 2 * _gegenbauer_value(k, lam, gram[i][j])
        out[k] = (total == 0)
    return out
