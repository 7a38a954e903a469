"""Shortest vectors of the 24-dimensional laminated lattice and the
biangular line systems cut out of them.

Everything here is integer arithmetic: the lattice is used at scale
sqrt(32), so shortest vectors have squared norm 32 and pairwise products
in {0, +-8, +-16, +-32}.  The binary Golay code underneath is not taken
on trust: it is rebuilt by factoring x^23 + 1 over GF(2) and checked
against its weight enumerator before anything else runs.
"""

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .constructions import BinaryCode, VectorSet
from .solve import LineSystem

SCALE = 32  # squared length of a shortest vector in the integer model

_WEIGHT_ENUMERATOR = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


# -- the Golay code by factorization -----------------------------------------------


def _gf2_mod(dividend: int, divisor: int) -> int:
    dd = divisor.bit_length() - 1
    while dividend.bit_length() - 1 >= dd and dividend:
        dividend ^= divisor << (dividend.bit_length() - 1 - dd)
    return dividend


@lru_cache(maxsize=1)
def _cyclic_generator() -> int:
    """The smallest degree-11 divisor of x^23 + 1 over GF(2), as a bitmask."""
    target = (1 << 23) | 1
    found = []
    for middle in range(1 << 10):
        g = (1 << 11) | (middle << 1) | 1
        if _gf2_mod(target, g) == 0:
            found.append(g)
    if len(found) != 2:
        raise RuntimeError(f"x^23+1 has {len(found)} degree-11 divisors, expected 2")
    return min(found)


@lru_cache(maxsize=1)
def _codeword_array() -> np.ndarray:
    """All 4096 extended-Golay words as a (4096, 24) 0/1 array."""
    g = _cyclic_generator()
    basis = []
    for i in range(12):
        shifted = g << i
        row = [(shifted >> k) & 1 for k in range(23)]
        row.append(sum(row) % 2)
        basis.append(row)
    G = np.array(basis, dtype=np.uint8)
    K = np.array([[(k >> b) & 1 for b in range(12)] for k in range(4096)],
                 dtype=np.uint8)
    words = (K @ G) % 2
    counts = dict(zip(*np.unique(words.sum(axis=1), return_counts=True)))
    counts = {int(k): int(v) for k, v in counts.items()}
    if counts != _WEIGHT_ENUMERATOR:
        raise RuntimeError(f"weight enumerator {counts} is not the Golay one")
    return words


def golay_code() -> BinaryCode:
    return BinaryCode(24, tuple(tuple(int(b) for b in w) for w in _codeword_array()))


# -- shortest vectors ---------------------------------------------------------------


@lru_cache(maxsize=1)
def _shortest_array() -> np.ndarray:
    """The 196560 shortest vectors, squared norm 32, as (196560, 24) int16."""
    words = _codeword_array()
    octads = words[words.sum(axis=1) == 8]

    signs = np.array([[1 - 2 * ((s >> b) & 1) for b in range(8)]
                      for s in range(256)
                      if bin(s).count("1") % 2 == 0], dtype=np.int16)
    blocks = []
    for octad in octads:
        support = np.flatnonzero(octad)
        block = np.zeros((128, 24), dtype=np.int16)
        block[:, support] = 2 * signs
        blocks.append(block)

    pair_rows = []
    for i in range(24):
        for j in range(i + 1, 24):
            for si in (4, -4):
                for sj in (4, -4):
                    r = np.zeros(24, dtype=np.int16)
                    r[i], r[j] = si, sj
                    pair_rows.append(r)
    blocks.append(np.array(pair_rows, dtype=np.int16))

    base = 1 - 2 * words.astype(np.int16)
    for j in range(24):
        block = base.copy()
        block[:, j] *= -3
        blocks.append(block)

    vectors = np.concatenate(blocks)
    if vectors.shape != (196560, 24):
        raise RuntimeError(f"built {vectors.shape[0]} vectors, expected 196560")
    if not ((vectors.astype(np.int32) ** 2).sum(axis=1) == SCALE).all():
        raise RuntimeError("a vector has the wrong norm")
    if np.unique(vectors, axis=0).shape[0] != 196560:
        raise RuntimeError("duplicate shortest vectors")
    _check_product_sample(vectors)
    return vectors


def _check_product_sample(vectors: np.ndarray):
    """Pairwise products of a stratified sample against the whole set."""
    allowed = {0, 8, -8, 16, -16, 32, -32}
    sample = np.concatenate([vectors[:100], vectors[100::937]])
    products = sample.astype(np.int32) @ vectors.astype(np.int32).T
    got = set(np.unique(products).tolist())
    if not got <= allowed:
        raise RuntimeError(f"inner products {sorted(got - allowed)} out of range")


def golay_and_leech() -> dict:
    return {"golay": golay_code(),
            "leech_shortest": VectorSet(tuple(tuple(int(x) for x in r)
                                              for r in _shortest_array()), SCALE)}


# -- biangular cross-sections -------------------------------------------------------


def _rank_reaches(rows: np.ndarray, cap: int) -> int:
    """Exact rank by elimination, stopping once `cap` pivots are found.

    Sound as an exact rank only when the caller has separately proven
    rank <= cap (orthogonality to 24 - cap independent vectors).
    """
    pivots: list = []
    cols: list = []
    for raw in rows:
        row = [Fraction(int(x)) for x in raw]
        for col, prow in zip(cols, pivots):
            f = row[col]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
        lead = next((k for k, v in enumerate(row) if v), None)
        if lead is None:
            continue
        inv = row[lead]
        pivots.append([v / inv for v in row])
        cols.append(lead)
        if len(pivots) == cap:
            return cap
    return len(pivots)


_INTERN = {0: Fraction(0), 32: Fraction(1, 3), -32: Fraction(-1, 3),
           96: Fraction(1)}


def _section_system(rows: np.ndarray, orthogonal_to: list) -> LineSystem:
    """LineSystem for rows of squared norm 96 with products {0, +-32}.

    PSD follows from the rows being actual coordinates; the rank bound
    from the checked orthogonalities makes the early-stop rank exact.
    """
    for w in orthogonal_to:
        if (rows.astype(np.int64) @ np.asarray(w, dtype=np.int64)).any():
            raise RuntimeError("claimed orthogonality fails")
    cap = 24 - len(orthogonal_to)
    d = _rank_reaches(rows, cap)
    products = rows.astype(np.int64) @ rows.astype(np.int64).T
    values = set(np.unique(products).tolist())
    if not values <= {0, 32, -32, 96}:
        raise RuntimeError(f"unexpected section products {sorted(values)}")
    n = rows.shape[0]
    gram = tuple(tuple(_INTERN[int(v)] for v in prow) for prow in products)
    angles = frozenset(_INTERN[int(v)] for v in values if v != 96)
    return LineSystem(gram=gram, n=n, d=d, angles=angles, source="constructed")


@lru_cache(maxsize=1)
def leech_cross_sections() -> dict:
    """Biangular systems of 2300, 1408 and 896 lines, keyed by rank.

    The 4600 vectors at product 16 with a fixed shortest vector come in
    antipodal pairs after the 2y - l recentering; representatives with
    positive leading coordinate span rank 23.  Vanishing products with
    one representative x cut out 1408 lines (the count is the same for
    every choice of x), and further demanding a vanishing product with a
    second representative at cosine +-1/3 from x leaves 896.  Cutting
    instead by a second representative orthogonal to x leaves 840 for
    every admissible choice, so the +-1/3 cut is the one that reaches
    the published size.
    """
    vectors = _shortest_array()
    ell = np.zeros(24, dtype=np.int16)
    ell[0] = ell[1] = 4
    if not (vectors == ell).all(axis=1).any():
        raise RuntimeError("reference vector missing from the set")
    Y = vectors[vectors.astype(np.int32) @ ell.astype(np.int32) == 16]
    if Y.shape[0] != 4600:
        raise RuntimeError(f"hyperplane section has {Y.shape[0]} vectors, not 4600")
    Z = 2 * Y.astype(np.int32) - ell.astype(np.int32)

    lead = np.argmax(Z != 0, axis=1)
    keep = Z[np.arange(Z.shape[0]), lead] > 0
    reps = Z[keep]
    reps = reps[np.lexsort(reps.T[::-1])]
    if reps.shape[0] != 2300:
        raise RuntimeError(f"{reps.shape[0]} antipodal representatives, not 2300")

    x = reps[0]
    products = reps @ x
    U = reps[products == 0]
    if U.shape[0] != 1408:
        raise RuntimeError(f"first cross-section has {U.shape[0]} lines, not 1408")
    xp = reps[np.flatnonzero(np.abs(products) == SCALE)[0]]
    V = U[(U @ xp) == 0]
    if V.shape[0] != 896:
        raise RuntimeError(f"second cross-section has {V.shape[0]} lines, not 896")

    return {23: _section_system(reps, [ell]),
            22: _section_system(U, [ell, x]),
            21: _section_system(V, [ell, x, xp])}
