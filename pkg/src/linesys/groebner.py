"""Buchberger's algorithm with a reduction budget, plus elimination helpers.

This is a plain implementation tuned for the small systems that arise from
key equations of candidate Gram matrices: a handful of variables, generators
of degree at most ~16.  Pair selection follows the normal strategy (smallest
lcm in the active order) and both classical skip criteria are applied
(coprime leading terms, and the chain criterion).

The `budget` argument caps the number of S-polynomial reductions.  Exceeding
it raises BudgetExceeded; callers translate that into an "undecided" verdict
instead of an answer.  All returned bases are reduced: minimal,
inter-reduced, monic, sorted by decreasing leading term.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import MPoly, TermOrder, grevlex, lex

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(Exception):
    """Raised when a Groebner run spends its S-polynomial allowance."""


def _lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def normal_form(p: MPoly, basis: list[MPoly], order: TermOrder) -> MPoly:
    """Fully reduce p modulo basis (head and tail reduction)."""
    leads = [(g.leading(order), g.c) for g in basis]
    key = order.key
    work = dict(p.c)
    rem: dict = {}
    while work:
        we = max(work, key=key)
        wq = work[we]
        for (ge, gq), gc in leads:
            if _divides(ge, we):
                de = tuple(a - b for a, b in zip(we, ge))
                f = wq / gq
                # subtract f * x^de * g in place; the leading term cancels
                for e2, q2 in gc.items():
                    e = tuple(a + b for a, b in zip(de, e2))
                    s = work.get(e)
                    s = -f * q2 if s is None else s - f * q2
                    if s:
                        work[e] = s
                    else:
                        work.pop(e, None)
                break
        else:
            rem[we] = wq
            del work[we]
    out = MPoly(p.n)
    out.c = rem
    return out


def _s_poly(f: MPoly, g: MPoly, order: TermOrder) -> MPoly:
    fe, fq = f.leading(order)
    ge, gq = g.leading(order)
    l = _lcm(fe, ge)
    tf = MPoly(f.n, {tuple(a - b for a, b in zip(l, fe)): 1 / fq})
    tg = MPoly(g.n, {tuple(a - b for a, b in zip(l, ge)): 1 / gq})
    return tf * f - tg * g


def buchberger(gens: list[MPoly], order: TermOrder,
               budget: int = DEFAULT_BUDGET) -> list[MPoly]:
    """Reduced Groebner basis of the ideal generated by gens."""
    G: list[MPoly] = []
    for g in gens:
        if not g.is_zero:
            G.append(g.monic(order))
    if not G:
        return []
    n = G[0].n
    leads = [g.leading(order)[0] for g in G]
    # normal strategy: smallest lcm first; selection keys are computed once
    # per pair, with (i, j) as a deterministic tie-break
    pairs = {(i, j): order.key(_lcm(leads[i], leads[j]))
             for i in range(len(G)) for j in range(i + 1, len(G))}
    spent = 0

    while pairs:
        best = min(pairs, key=lambda ij: (pairs[ij], ij))
        del pairs[best]
        i, j = best
        li, lj = leads[i], leads[j]
        l = _lcm(li, lj)
        # product criterion: coprime leading monomials reduce to zero
        if all(a + b == c for a, b, c in zip(li, lj, l)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(leads[k], l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        spent += 1
        if spent > budget:
            raise BudgetExceeded(f"S-polynomial budget {budget} exhausted")
        h = normal_form(_s_poly(G[i], G[j], order), G, order)
        if not h.is_zero:
            h = h.monic(order)
            G.append(h)
            lk = h.leading(order)[0]
            leads.append(lk)
            k = len(G) - 1
            for i2 in range(k):
                pairs[(i2, k)] = order.key(_lcm(leads[i2], lk))

    return reduce_basis(G, order)


def reduce_basis(G: list[MPoly], order: TermOrder) -> list[MPoly]:
    """Minimal + inter-reduced + monic basis, sorted by decreasing lead."""
    # minimal: drop any element whose leading term another leading term divides
    leads = [g.leading(order)[0] for g in G]
    keep = []
    for i, g in enumerate(G):
        if any(j != i and _divides(leads[j], leads[i])
               and (leads[j] != leads[i] or j < i) for j in range(len(G))):
            continue
        keep.append(g)
    # inter-reduce tails
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order) if others else g
        if not r.is_zero:
            out.append(r.monic(order))
    out.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return out


def is_trivial_ideal(gb: list[MPoly]) -> bool:
    """True iff the reduced basis is {1}, i.e. no common zeros."""
    return len(gb) == 1 and gb[0].is_constant and not gb[0].is_zero


def is_zero_dimensional(gb: list[MPoly], order: TermOrder, nvars: int) -> bool:
    """Finitely many solutions iff each variable has a pure-power leading term."""
    if is_trivial_ideal(gb):
        return True
    covered = [False] * nvars
    for g in gb:
        e = g.leading(order)[0]
        nz = [i for i, k in enumerate(e) if k]
        if len(nz) == 1:
            covered[nz[0]] = True
    return all(covered)


def eliminant(gens: list[MPoly], target: int, nvars: int,
              budget: int = DEFAULT_BUDGET,
              first: int | None = None) -> MPoly:
    """Smallest univariate polynomial in variable `target` inside the ideal.

    Runs a lex Groebner basis with every other variable more significant than
    `target` (and `first`, if given, most significant of all, which is where
    the saturation variable goes).  Returns the zero polynomial when the
    ideal contains no univariate relation for the target, which signals a
    positive-dimensional solution set in that coordinate.
    """
    rest = [i for i in range(nvars) if i != target and i != first]
    priority = ([first] if first is not None else []) + rest + [target]
    order = lex(nvars, priority)
    gb = buchberger(gens, order, budget)
    best: MPoly | None = None
    for g in gb:
        if g.variables_used() <= {target}:
            if best is None or g.degree_in(target) < best.degree_in(target):
                best = g
    return best if best is not None else MPoly(nvars)


def elimination_ideal(gens: list[MPoly], drop: set[int], nvars: int,
                      budget: int = DEFAULT_BUDGET) -> list[MPoly]:
    """Generators of the ideal intersected with Q[variables not in drop]."""
    keep = [i for i in range(nvars) if i not in drop]
    priority = sorted(drop) + keep
    order = lex(nvars, priority)
    gb = buchberger(gens, order, budget)
    return [g for g in gb if not (g.variables_used() & drop)]
