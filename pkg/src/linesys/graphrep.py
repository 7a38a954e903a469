"""Colored-graph encoding of candidate matrices.

A candidate matrix C over m symbols maps to a vertex-colored graph X(C)
so that two candidates of equal size and symbol count are equivalent
(signed permutation of lines combined with a sign-respecting relabeling
of symbols) exactly when X(C1) and X(C2) admit a color-preserving
isomorphism.  This provides a second canonization route, independent of
the lexicographic one, used as a consistency oracle.

Vertex layout for an n-line candidate with m symbols (2n^2 + n + 2m
vertices in four color classes):

    u_i                 line vertices           color 0
    v_i1, v_i2          signed copies +x_i/-x_i color 1
    w_ij1..w_ij4        one gadget per pair i<j color 2
    z_l1, z_l2          +symbol/-symbol         color 3

The gadget vertices pair the signed copies: w_ij1 ~ (+i,+j),
w_ij2 ~ (-i,-j), w_ij3 ~ (+i,-j), w_ij4 ~ (-i,+j).  Flipping the sign
of line i therefore swaps w_ij1 with w_ij4 and w_ij2 with w_ij3, which
moves the symbol links exactly as the matrix entry's sign moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gram import Matrix, symbols_used

__all__ = ["ColoredGraph", "edge_classes", "to_graph", "graphs_isomorphic"]


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    m: int
    colors: tuple[int, ...]
    edges: frozenset

    @property
    def order(self) -> int:
        return len(self.colors)


def _e(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def edge_classes(C: Matrix, m: int) -> tuple:
    """The five edge groups of the encoding, as frozensets of vertex pairs.

    E1 joins each line to its two signed copies, E2 each symbol's positive
    vertex to its negative one.  Orthogonal pairs get a path gadget (E3);
    non-orthogonal pairs get the sign-pairing pattern (E4) plus links from
    each gadget vertex to the symbol value it witnesses (E5).
    """
    n = len(C)
    wbase = 3 * n
    zbase = 3 * n + 2 * n * (n - 1)

    def v(i, k):
        return n + 2 * i + (k - 1)

    def z(lbl, k):
        return zbase + 2 * (lbl - 1) + (k - 1)

    e1 = {_e(i, v(i, k)) for i in range(n) for k in (1, 2)}
    e2 = {_e(z(lbl, 1), z(lbl, 2)) for lbl in range(1, m + 1)}
    e3, e4, e5 = set(), set(), set()
    for p, (i, j) in enumerate(combinations(range(n), 2)):
        w1, w2, w3, w4 = (wbase + 4 * p + t for t in range(4))
        entry = C[i][j]
        if entry == 0:
            e3 |= {_e(v(i, 1), w1), _e(v(i, 2), w1), _e(w1, w2),
                   _e(w2, w3), _e(w3, w4), _e(v(j, 1), w4), _e(v(j, 2), w4)}
            continue
        for k in (1, 2):
            wk, wk2 = (w1, w3) if k == 1 else (w2, w4)
            e4 |= {_e(v(i, k), wk), _e(v(j, k), wk),
                   _e(v(i, k), wk2), _e(v(j, 3 - k), wk2)}
            same, flip = (1, 2) if entry > 0 else (2, 1)
            e5 |= {_e(wk, z(abs(entry), same)), _e(wk2, z(abs(entry), flip))}
    return (frozenset(e1), frozenset(e2), frozenset(e3),
            frozenset(e4), frozenset(e5))


def to_graph(C: Matrix, m: int | None = None) -> ColoredGraph:
    """Encode a candidate matrix with m declared symbols as a colored graph."""
    n = len(C)
    used = symbols_used(C)
    if m is None:
        m = max(used) if used else 1
    elif used and max(used) > m:
        raise ValueError(f"entries use symbol {max(used)} > m={m}")
    colors = (0,) * n + (1,) * (2 * n) + (2,) * (2 * n * (n - 1)) + (3,) * (2 * m)
    edges = frozenset().union(*edge_classes(C, m))
    return ColoredGraph(n=n, m=m, colors=colors, edges=edges)


# -- isomorphism via color refinement + individualization ---------------------


def _refine(neigh: list, colors: list) -> list:
    """Iterate neighborhood-color splitting until the partition is stable.

    Ids are assigned by sorted signature rank, so two graphs refined inside
    one combined vertex set end up with comparable color ids.
    """
    while True:
        sigs = [(colors[x], tuple(sorted(colors[y] for y in neigh[x])))
                for x in range(len(colors))]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _matched(colors: list, half: int, ex: frozenset, ey: frozenset) -> bool:
    """With every color class a singleton per side, test the induced map."""
    pos = {}
    for a in range(half):
        pos[colors[a]] = a
    mp = {pos[colors[b + half]]: b for b in range(half)}
    return all(_e(mp[a], mp[b]) in ey for a, b in ex)


def _search(neigh: list, colors: list, half: int,
            ex: frozenset, ey: frozenset) -> bool:
    colors = _refine(neigh, colors)
    left: dict = {}
    right: dict = {}
    for x in range(half):
        left[colors[x]] = left.get(colors[x], 0) + 1
    for y in range(half, 2 * half):
        right[colors[y]] = right.get(colors[y], 0) + 1
    if left != right:
        return False
    splittable = [c for c, k in left.items() if k > 1]
    if not splittable:
        return _matched(colors, half, ex, ey)
    target = min(splittable, key=lambda c: (left[c], c))
    fresh = 2 * half
    a = next(x for x in range(half) if colors[x] == target)
    for b in range(half, 2 * half):
        if colors[b] != target:
            continue
        trial = list(colors)
        trial[a] = fresh
        trial[b] = fresh
        if _search(neigh, trial, half, ex, ey):
            return True
    return False


def graphs_isomorphic(X1: ColoredGraph, X2: ColoredGraph) -> bool:
    """Decide color-preserving isomorphism of two encoded candidates."""
    if (X1.n, X1.m) != (X2.n, X2.m):
        return False
    if sorted(X1.colors) != sorted(X2.colors) or len(X1.edges) != len(X2.edges):
        return False
    half = X1.order
    neigh: list = [[] for _ in range(2 * half)]
    for a, b in X1.edges:
        neigh[a].append(b)
        neigh[b].append(a)
    for a, b in X2.edges:
        neigh[a + half].append(b + half)
        neigh[b + half].append(a + half)
    return _search(neigh, list(X1.colors) + list(X2.colors), half,
                   X1.edges, X2.edges)
