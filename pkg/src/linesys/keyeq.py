"""Polynomial systems attached to candidate Gram matrices.

A candidate pattern with symbols 1..m describes the symbolic matrix M(C)
with 1 on the diagonal and code +-k standing for +-a_k, where a_1..a_m are
indeterminate angle values.  The pattern is realisable by n lines spanning
at most d dimensions only if every (d+1) x (d+1) submatrix determinant of
M(C) vanishes at the angle values; admissible values are additionally

    a_k not in {0, 1, -1}   and   a_k^2 != a_l^2  for k != l

(the excluded locus: symbols denote distinct angles, never right angles by
code 0's monopoly on orthogonality, never parallel lines).  Nonsolvability
of the resulting saturated system is certified through a Groebner basis.

Variable layout: 0..m-1 are the angle values, m is the Rabinowitsch
auxiliary t enforcing the saturation via  t * (product of excluded factors
over the symbols present) + 1 = 0.

Two cheap exact shortcuts run before any Groebner work:

* determinants are trial-divided by excluded-locus factors (each factor is
  a unit modulo the saturated ideal, so dividing it out changes nothing
  about solvability);
* a minor that reduces to a nonzero constant kills the candidate outright,
  and a system whose minors all reduce to zero passes outright.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .groebner import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    buchberger,
    is_trivial_ideal,
    normal_form,
)
from .polynomials import MPoly, block_first, det_poly, grevlex

PASS, FAIL, UNDECIDED = "pass", "fail", "undecided"

_det_cache: dict = {}
_factor_cache: dict = {}


def clear_caches():
    _det_cache.clear()
    _factor_cache.clear()


def entry_poly(code: int, m: int) -> MPoly:
    n = m + 1
    if code == 0:
        return MPoly(n)
    a = code if code > 0 else -code
    exp = [0] * n
    exp[a - 1] = 1
    return MPoly(n, {tuple(exp): Fraction(1 if code > 0 else -1)})


def variable_names(m: int) -> list[str]:
    return [f"a{k}" for k in range(1, m + 1)] + ["t"]


def excluded_factors(symbols: frozenset, m: int) -> list[MPoly]:
    """The locus polynomials for the symbols present, small degree first."""
    key = (symbols, m)
    if key in _factor_cache:
        return _factor_cache[key]
    n = m + 1
    facs = []
    for k in sorted(symbols):
        facs.append(MPoly.var(n, k - 1))
    for k in sorted(symbols):
        facs.append(MPoly.var(n, k - 1) ** 2 - 1)
    for k, l in combinations(sorted(symbols), 2):
        facs.append(MPoly.var(n, k - 1) ** 2 - MPoly.var(n, l - 1) ** 2)
    _factor_cache[key] = facs
    return facs


def saturation_poly(symbols: frozenset, m: int) -> MPoly:
    prod = MPoly.var(m + 1, m)  # the auxiliary t
    for f in excluded_factors(symbols, m):
        prod = prod * f
    return prod + 1


def strip_excluded(p: MPoly, symbols: frozenset, m: int) -> MPoly:
    """Divide out every excluded-locus factor that divides p, repeatedly."""
    if p.is_zero or p.is_constant:
        return p
    facs = excluded_factors(symbols, m)
    changed = True
    while changed and not p.is_constant:
        changed = False
        for f in facs:
            q = p.divexact(f)
            if q is not None:
                p = q
                changed = True
                break
    return p


def _minor_det(C, rows, cols, m) -> MPoly:
    key = (m, tuple(C[i][j] if i != j else None for i in rows for j in cols))
    got = _det_cache.get(key)
    if got is not None:
        return got
    one = MPoly.const(m + 1, 1)
    block = [[one if i == j else entry_poly(C[i][j], m) for j in cols] for i in rows]
    d = det_poly(block)
    _det_cache[key] = d
    return d


def minor_system(C, m: int, size: int, principal_only: bool = False) -> list[MPoly]:
    """Distinct nonzero (size x size) minors, excluded factors stripped.

    With `principal_only` the row and column sets coincide; otherwise they
    range independently (transposed pairs are skipped: the matrix is
    symmetric, so det M(I,J) = det M(J,I)).

    A returned constant polynomial means the candidate is unsatisfiable (it
    is some nonzero rational); callers should check for it.
    """
    n = len(C)
    if size > n:
        return []
    symbols = frozenset(abs(c) for row in C for c in row if c)
    seen = set()
    out = []
    index_sets = list(combinations(range(n), size))
    for a, rows in enumerate(index_sets):
        cols_iter = [rows] if principal_only else index_sets[a:]
        for cols in cols_iter:
            d = _minor_det(C, rows, cols, m)
            if d.is_zero:
                continue
            d = strip_excluded(d, symbols, m)
            if d.is_constant:
                return [d]  # unsatisfiable witness dominates everything
            d = d.primitive()
            if d.leading(grevlex(m + 1))[1] < 0:
                d = -d
            k = d.key_repr()
            if k not in seen:
                seen.add(k)
                out.append(d)
    return out


def rank_system(C, m: int, d: int, principal_only: bool = False) -> list[MPoly]:
    """Key equations forcing rank <= d, without the saturation element."""
    return minor_system(C, m, d + 1, principal_only)


def saturated_groebner(gens, symbols: frozenset, m: int,
                       budget: int = DEFAULT_BUDGET, start_gb=None,
                       order=None):
    """Groebner basis of the rank ideal saturated at the excluded locus.

    Returns (basis, order); the basis is trivial exactly when no admissible
    assignment exists.  The default order eliminates the auxiliary variable
    first, so the basis stays usable for zero-dimensionality checks and as a
    generating set for later eliminations.  Callers that only ask
    order-independent questions of the result (triviality, membership) may
    pass a cheaper order such as grevlex.

    Each excluded factor is first reduced modulo the unsaturated basis: a
    factor reducing to zero lies in the ideal (nothing admissible is left),
    one reducing to a nonzero constant is invertible on the variety and
    drops out, and what remains enters the product in reduced form.  All of
    this leaves the saturation ideal unchanged, because replacing F by F+h
    with h in the ideal never changes which g satisfy g*F^N in the ideal.
    """
    nvars = m + 1
    base = grevlex(nvars)
    trivial = [MPoly.const(nvars, 1)]
    gb = buchberger(gens, base, budget) if start_gb is None else start_gb
    if is_trivial_ideal(gb):
        return trivial, base
    F = MPoly.const(nvars, 1)
    for f in excluded_factors(symbols, m):
        nf = normal_form(f, gb, base)
        if nf.is_zero:
            return trivial, base
        if nf.is_constant:
            continue
        F = normal_form(F * nf, gb, base)
        if F.is_zero:
            return trivial, base
        if F.is_constant:
            F = MPoly.const(nvars, 1)
    aux = MPoly.var(nvars, m)
    order = block_first(nvars, m)
    gb2 = buchberger(gb + [aux * F + 1], order, budget)
    return gb2, order


def solvability(C, m: int, d: int, principal_only: bool = False,
                budget: int = DEFAULT_BUDGET) -> str:
    """Can the pattern C be realised with admissible angle values in R^d?

    PASS or FAIL are certificates (over the complex numbers, off the
    excluded locus); UNDECIDED means the budget ran out, which callers must
    treat as PASS to stay conservative.
    """
    gens = rank_system(C, m, d, principal_only)
    if not gens:
        return PASS
    if any(g.is_constant for g in gens):
        return FAIL
    order = grevlex(m + 1)
    try:
        gb = buchberger(gens, order, budget)
        if is_trivial_ideal(gb):
            return FAIL
        symbols = frozenset(abs(c) for row in C for c in row if c)
        gb2, _ = saturated_groebner(gens, symbols, m, budget, start_gb=gb)
        return FAIL if is_trivial_ideal(gb2) else PASS
    except BudgetExceeded:
        return UNDECIDED
