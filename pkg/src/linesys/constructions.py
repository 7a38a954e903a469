"""Explicit line systems: lattice sections, code embeddings, and lifts.

Everything here emits a LineSystem with an exact Gram matrix.  The
preferred representation is a list of integer coordinate rows sharing one
squared norm (the scale), because every family below admits one: Gram
entries are then plain fractions and ranks come from cheap integer
elimination.  Systems defined only through a solved candidate matrix
(the certified instances) fall back to Gram-level construction in a
quadratic field.

Three mechanisms produce most of the families:

* binary codes embedded on the hypercube, with inner products read off
  pairwise Hamming distances;
* root systems of the D and E lattices, taken modulo sign;
* two lifting maps that append a coordinate to a spherical 2-distance or
  4-distance point set and collapse its inner products to two values.

The equiangular witness sets at cosine 1/3 used by the composite
families ship as data and are re-verified every time they are handed
out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from .instances import solved_instances
from .quadratic import QuadExt
from .solve import LineSystem, gram_at, rank_exact

HALF = Fraction(1, 2)


# -- vector sets and binary codes -------------------------------------------------


@dataclass(frozen=True)
class VectorSet:
    """Integer coordinate rows with one common squared norm.

    The represented points are rows/sqrt(scale), so the Gram matrix is
    Fraction(dot, scale) entrywise.  A VectorSet is a point set, not a
    line system: antipodal pairs and inner products of -1 are legal here
    (the lifting maps need them); `line_system` refuses them.
    """

    rows: tuple
    scale: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("empty vector set")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"row {i} has length {len(r)}, not {width}")
            norm = sum(x * x for x in r)
            if norm != self.scale:
                raise ValueError(f"row {i} has squared norm {norm}, "
                                 f"not the scale {self.scale}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows[0])

    @cached_property
    def rank(self) -> int:
        return rank_exact(self.rows)

    def gram(self):
        s = self.scale
        return tuple(tuple(Fraction(sum(x * y for x, y in zip(r, q)), s)
                           for q in self.rows)
                     for r in self.rows)

    def inner_products(self) -> set:
        g = self.gram()
        return {g[i][j] for i in range(self.n) for j in range(i)}

    def line_system(self, source: str = "constructed") -> LineSystem:
        return LineSystem.from_vectors(self.rows, self.scale, source=source)


@dataclass(frozen=True)
class BinaryCode:
    """Distinct binary words of one length; constraints checked on demand."""

    length: int
    words: tuple

    def __post_init__(self):
        words = tuple(tuple(int(b) for b in w) for w in self.words)
        object.__setattr__(self, "words", words)
        seen = set()
        for w in words:
            if len(w) != self.length:
                raise ValueError("codeword length mismatch")
            if any(b not in (0, 1) for b in w):
                raise ValueError("codeword entries must be bits")
            if w in seen:
                raise ValueError("duplicate codeword")
            seen.add(w)

    @property
    def size(self) -> int:
        return len(self.words)

    def weights(self) -> set:
        return {sum(w) for w in self.words}

    def pairwise_distances(self) -> set:
        return {sum(a != b for a, b in zip(u, v))
                for u, v in combinations(self.words, 2)}


def even_weight_code(length: int) -> BinaryCode:
    """All even-weight words with first bit zero: one word per hypercube diagonal."""
    if length < 2:
        raise ValueError("length must be at least 2")
    words = [(0,) + tail for tail in product((0, 1), repeat=length - 1)
             if sum(tail) % 2 == 0]
    return BinaryCode(length, tuple(words))


def code_embed(code: BinaryCode) -> VectorSet:
    """Words to hypercube diagonals: bit b becomes the coordinate 1 - 2b.

    Inner products are 1 - 2*dist/length, so the embedding spans a
    biangular line set exactly when the nontrivial distances fall in at
    most two classes {delta, length - delta}; complementary words would
    land on one line and are rejected.
    """
    d = code.length
    magnitudes = set()
    for dist in code.pairwise_distances():
        if dist == d:
            raise ValueError("complementary codewords map to an antipodal pair")
        magnitudes.add(abs(Fraction(d - 2 * dist, d)))
    if len(magnitudes) > 2:
        raise ValueError(f"more than two distance classes: {sorted(magnitudes)}")
    rows = tuple(tuple(1 - 2 * b for b in w) for w in code.words)
    return VectorSet(rows, d)


# -- lattice line families ---------------------------------------------------------


def dd_lattice_lines(d: int) -> LineSystem:
    """Shortest vectors of the D_d lattice modulo sign: d(d-1) lines.

    Representatives e_i + e_j and e_i - e_j for i < j (first nonzero
    coordinate positive); inner products 0 and +-1/2.
    """
    if d < 2:
        raise ValueError("need dimension at least 2")
    rows = []
    for i, j in combinations(range(d), 2):
        for sj in (1, -1):
            r = [0] * d
            r[i], r[j] = 1, sj
            rows.append(tuple(r))
    return LineSystem.from_vectors(rows, 2)


def _e8_root_representatives():
    reps = []
    for i, j in combinations(range(8), 2):
        for sj in (2, -2):
            r = [0] * 8
            r[i], r[j] = 2, sj
            reps.append(tuple(r))
    for tail in product((1, -1), repeat=7):
        if (1 + sum(tail)) % 4 == 0:  # even number of -1 entries overall
            reps.append((1,) + tail)
    return reps


_E7_AXIS = (1, 1, 1, 1, 1, 1, 1, 1)
_E6_AXIS = (1, 1, -1, -1, -1, -1, -1, -1)


def exceptional_root_lines(kind: str) -> LineSystem:
    """Lines through the roots of E6, E7 or E8: 36, 63 or 120 of them.

    The integer model doubles the usual coordinates so both root shapes
    of E8 have squared norm 8.  E7 is the subsystem orthogonal to one
    root, E6 the subsystem orthogonal to two roots at cosine -1/2.
    """
    reps = _e8_root_representatives()
    if kind == "E7":
        reps = [r for r in reps if sum(a * b for a, b in zip(r, _E7_AXIS)) == 0]
    elif kind == "E6":
        reps = [r for r in reps
                if sum(a * b for a, b in zip(r, _E7_AXIS)) == 0
                and sum(a * b for a, b in zip(r, _E6_AXIS)) == 0]
    elif kind != "E8":
        raise ValueError("kind must be one of E6, E7, E8")
    return LineSystem.from_vectors(reps, 8)


def root_system_points(kind: str) -> VectorSet:
    """The full (antipodally closed) root set of E6/E7/E8 as a point set."""
    reps = exceptional_root_lines(kind)  # validates kind
    base = _e8_root_representatives()
    if kind == "E7":
        base = [r for r in base if sum(a * b for a, b in zip(r, _E7_AXIS)) == 0]
    elif kind == "E6":
        base = [r for r in base
                if sum(a * b for a, b in zip(r, _E7_AXIS)) == 0
                and sum(a * b for a, b in zip(r, _E6_AXIS)) == 0]
    rows = base + [tuple(-x for x in r) for r in base]
    assert len(rows) == 2 * reps.n
    return VectorSet(tuple(rows), 8)


def d_lattice_points(k: int) -> VectorSet:
    """All 2k(k-1) shortest vectors +-e_i +- e_j of D_k, antipodes included."""
    if k < 2:
        raise ValueError("need at least 2 coordinates")
    rows = []
    for i, j in combinations(range(k), 2):
        for si, sj in product((1, -1), repeat=2):
            r = [0] * k
            r[i], r[j] = si, sj
            rows.append(tuple(r))
    return VectorSet(tuple(rows), 2)


def simplex_edge_midpoints(d: int) -> VectorSet:
    """Midpoints of the edges of the regular simplex in R^d, normalized.

    Realized in the hyperplane of R^{d+1} orthogonal to the all-ones
    vector: the rows are (d+1)(e_i + e_j) - 2*ones.  A spherical
    2-distance set of size C(d+1, 2) and rank d.
    """
    if d < 2:
        raise ValueError("need dimension at least 2")
    k = d + 1
    rows = []
    for i, j in combinations(range(k), 2):
        r = [-2] * k
        r[i] += k
        r[j] += k
        rows.append(tuple(r))
    return VectorSet(tuple(rows), 2 * k * (k - 2))


def cubic_three_distance_set(d: int) -> VectorSet:
    """C(d, 3) points: supports of size 3 at height d-3, the rest at -3.

    All rows are orthogonal to the all-ones vector of R^d; the three
    inner-product values are -3/(d-3), (d-9)/(3(d-3)) and
    (2d-9)/(3(d-3)).  At d = 18 the middle value equals 1/5 and the set
    spans 816 biangular lines directly; below that it is lift fodder.
    """
    if d < 7:
        raise ValueError("need at least 7 coordinates")
    rows = []
    for s in combinations(range(d), 3):
        r = [-3] * d
        for i in s:
            r[i] += d
        rows.append(tuple(r))
    return VectorSet(tuple(rows), 3 * d * (d - 3))

# -- lifting maps ------------------------------------------------------------------


def _line_system_from_gram(gram, rank: int) -> LineSystem:
    """Assemble a LineSystem whose PSD-ness and rank are already known.

    Used when the Gram matrix is that of concretely given vectors and the
    rank was computed from their coordinates; redoing symmetric
    elimination on the full matrix would only repeat the work.
    """
    n = len(gram)
    angles = frozenset(gram[i][j] for i in range(n) for j in range(i))
    if any(v == -1 for v in angles):
        raise ValueError("antipodal pair: -1 is not a line angle")
    return LineSystem(tuple(tuple(r) for r in gram), n, rank, angles,
                      "constructed")


def _gram_and_rows(points):
    if isinstance(points, VectorSet):
        return points.gram(), points.rows
    if isinstance(points, LineSystem):
        return points.gram, None
    return tuple(tuple(r) for r in points), None


def _offdiag_values(gram) -> set:
    n = len(gram)
    return {gram[i][j] for i in range(n) for j in range(i)}


def lift_two_distance(points, h) -> LineSystem:
    """Append a constant coordinate h to a spherical 2-distance set.

    The lifted vectors are [h, sqrt(1-h^2) x]; inner products move by
    g -> h^2 + (1-h^2) g, so the two values stay two values and, for
    0 < h < 1, both land strictly inside (-1, 1): an infinite family of
    biangular line systems, one for every height.
    """
    gram, rows = _gram_and_rows(points)
    h2 = h * h
    if isinstance(h2, QuadExt):
        if not h2.is_rational():
            raise ValueError("h^2 must be rational")
        h2 = h2.as_fraction()
    else:
        h2 = Fraction(h2)
    if not 0 < h2 < 1 or (isinstance(h, QuadExt) and h.sign() <= 0) \
            or (not isinstance(h, QuadExt) and not h > 0):
        raise ValueError("need a height strictly between 0 and 1")
    values = _offdiag_values(gram)
    if len(values) > 2:
        raise ValueError(f"not a 2-distance set: {len(values)} values")
    n = len(gram)
    lifted = tuple(tuple(Fraction(1) if i == j else h2 + (1 - h2) * gram[i][j]
                         for j in range(n))
                   for i in range(n))
    if rows is not None:
        return _line_system_from_gram(lifted, rank_exact([(1,) + r for r in rows]))
    return LineSystem.from_gram(lifted, source="constructed")


def _equal_sum_pair(values):
    """The unique split of four values into two pairs with one negative sum."""
    v = sorted(values)
    found = []
    for k in (1, 2, 3):
        a, b = v[0], v[k]
        c, d = (v[i] for i in (1, 2, 3) if i != k)
        if a + b == c + d and a + b < 0:
            found.append((a, b))
    if len(found) != 1:
        raise ValueError("no unique equal-sum pairing; pass alpha and beta")
    return found[0]


def lift_four_distance(points, alpha=None, beta=None) -> LineSystem:
    """Collapse a 4-distance set with values {a, b, g, a+b-g} to two values.

    Appends the coordinate sqrt(-a-b) and rescales: the image of the
    inner product g0 is (-(a+b) + 2 g0)/(2 - a - b), sending both a and b
    to +-(a-b)/(2-a-b) and the remaining pair to +-(2g-a-b)/(2-a-b).
    Requires a + b < 0 and all values in [-1, 1); antipodal input pairs
    are welcome and land at an interior value.

    When alpha/beta are omitted they are derived from the value set,
    which works exactly when all four values occur: the two pairs are
    then forced by having equal sums.
    """
    gram, rows = _gram_and_rows(points)
    values = _offdiag_values(gram)
    if len(values) > 4:
        raise ValueError(f"not a 4-distance set: {len(values)} values")
    if alpha is None or beta is None:
        if len(values) != 4:
            raise ValueError("fewer than four values present; "
                             "pass alpha and beta explicitly")
        alpha, beta = _equal_sum_pair(values)
    s = alpha + beta
    if not s < 0:
        raise ValueError("need alpha + beta < 0")
    if any(v < -1 or not v < 1 for v in values):
        raise ValueError("inner products must lie in [-1, 1)")
    rest = sorted(values - {alpha, beta})
    if len(rest) == 2 and rest[0] + rest[1] != s:
        raise ValueError("values do not fit {alpha, beta, gamma, alpha+beta-gamma}")
    n = len(gram)
    den = 2 - s
    lifted = tuple(tuple(Fraction(1) if i == j else (-s + 2 * gram[i][j]) / den
                         for j in range(n))
                   for i in range(n))
    if rows is not None:
        return _line_system_from_gram(lifted, rank_exact([(1,) + r for r in rows]))
    return LineSystem.from_gram(lifted, source="constructed")


def theorem1_lines(d: int) -> LineSystem:
    """2(d-1)(d-2) lines in R^d at cosines 1/5 and 3/5.

    The shortest vectors of D_{d-1} form a 4-distance set with values
    {-1, -1/2, 0, 1/2}; lifting with alpha = -1, beta = 1/2 lands every
    pair on +-1/5 or +-3/5 and adds one dimension.
    """
    if d < 3:
        raise ValueError("need dimension at least 3")
    return lift_four_distance(d_lattice_points(d - 1), alpha=Fraction(-1),
                              beta=HALF)

# -- equiangular witnesses at cosine 1/3 -------------------------------------------

#: Largest known number of equiangular lines at common angle arccos(1/3),
#: by dimension.  The shipped witnesses below realize the entries for
#: dimensions 1, 2, 3, 5, 6 and 7; no witness is shipped for dimension 4.
ONE_THIRD_MAX = {1: 1, 2: 2, 3: 4, 4: 6, 5: 10, 6: 16, 7: 28}


def _pair_sum_rows(members):
    """Rows 4(e_i + e_j) - ones in R^8: squared norm 24, inner products +-8."""
    rows = []
    for i, j in members:
        r = [-1] * 8
        r[i], r[j] = 3, 3
        rows.append(tuple(r))
    return VectorSet(tuple(rows), 24)


def _code_witness(words):
    return code_embed(BinaryCode(6, words))


_WITNESS_BUILDERS = {
    1: lambda: _pair_sum_rows([(0, 1)]),
    2: lambda: _pair_sum_rows([(0, 1), (0, 2)]),
    3: lambda: _code_witness(((0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 1),
                              (0, 0, 1, 1, 0, 0), (0, 0, 1, 1, 1, 1))),
    5: lambda: _pair_sum_rows(list(combinations(range(5), 2))),
    6: lambda: code_embed(even_weight_code(6)),
    7: lambda: _pair_sum_rows(list(combinations(range(8), 2))),
}


def one_third_witness(dim: int) -> VectorSet:
    """A verified witness of ONE_THIRD_MAX[dim] lines at cosine 1/3.

    Verified on every call: correct cardinality, rank equal to dim, and
    every inner product +-scale/3.  Dimension 4 has no shipped witness.
    """
    builder = _WITNESS_BUILDERS.get(dim)
    if builder is None:
        raise ValueError(f"no witness shipped for dimension {dim}")
    w = builder()
    target = Fraction(1, 3)
    if w.n != ONE_THIRD_MAX[dim] or w.rank != dim \
            or any(abs(v) != target for v in w.inner_products()):
        raise RuntimeError(f"witness data for dimension {dim} failed its checks")
    return w


def _block_multipliers(scale: int):
    """Smallest t with 6 t^2 / scale a perfect square; see prop3_lines.

    Returns (t, row multiplier) so that [mult * w, 2t * e] has squared
    norm 10 t^2 whenever w has squared norm `scale`.
    """
    for t in range(1, 12 * scale + 1):
        q, r = divmod(6 * t * t, scale)
        if r == 0:
            root = int(q ** 0.5)
            while root * root < q:
                root += 1
            if root * root == q:
                return t, root
    raise ValueError(f"witness scale {scale} does not align with the block shape")


def prop3_lines(m: int, witness: VectorSet) -> LineSystem:
    """2m|Y| lines in R^(dim Y + m) at cosines 1/5 and 3/5.

    Rows [sqrt(6) y, +-2 e_t]/sqrt(10) for every witness member y, basis
    direction t < m and sign: same-direction pairs meet at (3g +- 2)/5
    with g = +-1/3, different directions at 3g/5 with g in {1, +-1/3}.
    """
    if m < 1:
        raise ValueError("need at least one appended direction")
    for u, v in combinations(witness.rows, 2):
        if 3 * abs(sum(x * y for x, y in zip(u, v))) != witness.scale:
            raise ValueError("witness is not equiangular at 1/3")
    t, mult = _block_multipliers(witness.scale)
    rows = []
    for e in range(m):
        for sign in (1, -1):
            for w in witness.rows:
                tail = [0] * m
                tail[e] = 2 * t * sign
                rows.append(tuple(mult * x for x in w) + tuple(tail))
    return LineSystem.from_vectors(rows, 10 * t * t)


def theorem2_lines(d: int, witness: VectorSet | None = None) -> LineSystem:
    """256 + 20|Y| lines in R^d at cosines 1/5 and 3/5, for d >= 10.

    The halved hypercube in the last ten coordinates contributes 256
    lines; a 1/3-equiangular witness Y in the remaining d - 10
    coordinates contributes the 20|Y| lines of the composite block.  The
    two blocks meet at +-1/5 because each hypercube coordinate is
    +-1/sqrt(10).
    """
    if d < 10:
        raise ValueError("need dimension at least 10")
    if witness is None:
        witness = one_third_witness(d - 10) if d > 10 else None
    code_rows = tuple(tuple(1 - 2 * b for b in w)
                      for w in even_weight_code(10).words)
    if witness is None:
        return LineSystem.from_vectors(code_rows, 10)
    if witness.rank != d - 10:
        raise ValueError(f"witness spans rank {witness.rank}, need {d - 10}")
    for u, v in combinations(witness.rows, 2):
        if 3 * abs(sum(x * y for x, y in zip(u, v))) != witness.scale:
            raise ValueError("witness is not equiangular at 1/3")
    t, mult = _block_multipliers(witness.scale)
    width = witness.dim
    rows = []
    for e in range(10):
        for sign in (1, -1):
            for w in witness.rows:
                tail = [0] * 10
                tail[e] = 2 * t * sign
                rows.append(tuple(mult * x for x in w) + tuple(tail))
    for r in code_rows:
        rows.append((0,) * width + tuple(t * x for x in r))
    assert len(rows) == 20 * witness.n + 256
    return LineSystem.from_vectors(rows, 10 * t * t)

# -- Hadamard spreads over constant-weight codes -----------------------------------


def hadamard_matrix(order: int):
    """The doubling-construction Hadamard matrix of order 2^k."""
    if order < 1 or order & (order - 1):
        raise ValueError("doubling construction covers powers of two only")
    H = ((1,),)
    while len(H) < order:
        H = tuple(r + r for r in H) + tuple(r + tuple(-x for x in r) for r in H)
    return H


def fano_triple_system() -> BinaryCode:
    """The seven cyclic triples {i, i+1, i+3} mod 7: any two share one point."""
    words = []
    for i in range(7):
        w = [0] * 7
        for k in (i, (i + 1) % 7, (i + 3) % 7):
            w[k] = 1
        words.append(tuple(w))
    return BinaryCode(7, tuple(words))


def greedy_triple_packing(d: int) -> BinaryCode:
    """First-fit maximal partial triple packing on d points.

    Greedy has no cardinality guarantee; callers report the size they
    got rather than assert one.
    """
    if d < 3:
        raise ValueError("need at least three points")
    chosen: list = []
    pairs: set = set()
    for triple in combinations(range(d), 3):
        cover = set(combinations(triple, 2))
        if cover & pairs:
            continue
        pairs |= cover
        w = [0] * d
        for k in triple:
            w[k] = 1
        chosen.append(tuple(w))
    return BinaryCode(d, tuple(chosen))


def lspec_lines(code: BinaryCode, H) -> LineSystem:
    """(w+1)|B| lines at cosines 0 and 1/w from a weight-w code.

    Each codeword's support (any two supports sharing at most one point)
    carries the w+1 rows of a Hadamard matrix of order w+1 with its
    first column deleted; renormalizing by sqrt(w) gives inner products
    +-1/w inside a support block, 0 or +-1/w across blocks.
    """
    weights = code.weights()
    if len(weights) != 1:
        raise ValueError("code is not constant-weight")
    w = weights.pop()
    if w % 4 != 3:
        raise ValueError("weight must be 3 mod 4 to match a Hadamard order")
    if code.length < 2 * w + 1:
        raise ValueError("length must be at least 2w + 1")
    supports = [tuple(i for i, b in enumerate(word) if b) for word in code.words]
    for s, t in combinations(supports, 2):
        if len(set(s) & set(t)) > 1:
            raise ValueError("two supports share more than one point")
    if len(H) != w + 1 or any(len(r) != w + 1 for r in H):
        raise ValueError(f"need a Hadamard matrix of order {w + 1}")
    if any(x * x != 1 for r in H for x in r):
        raise ValueError("Hadamard entries must be +-1")
    for r, q in combinations(H, 2):
        if sum(x * y for x, y in zip(r, q)) != 0:
            raise ValueError("Hadamard rows are not orthogonal")
    rows = []
    for support in supports:
        for h in H:
            r = [0] * code.length
            for k, pos in enumerate(support):
                r[pos] = h[k + 1]
            rows.append(tuple(r))
    return LineSystem.from_vectors(rows, w)


def biplane16_lines() -> LineSystem:
    """256 lines in R^16 at cosines 0 and 1/3 from the (16, 6, 2) biplane.

    The incidence matrix (J4 - I4) x I4 + I4 x (J4 - I4) has row weight 6
    and any two rows meet in exactly two points (H H^T = 4I + 2J, checked
    here).  Each row's support carries the 16 halved-hypercube diagonals
    of length 6, giving cross products (+-1 +- 1)/6 and in-block products
    +-2/6.
    """
    H = tuple(tuple(int((a != c and b == d) or (a == c and b != d))
                    for c in range(4) for d in range(4))
              for a in range(4) for b in range(4))
    for i in range(16):
        for j in range(16):
            got = sum(H[i][k] * H[j][k] for k in range(16))
            if got != (6 if i == j else 2):
                raise RuntimeError("incidence rows do not meet the 4I + 2J law")
    supports = [tuple(k for k in range(16) if row[k]) for row in H]
    rows = []
    for support in supports:
        for word in even_weight_code(6).words:
            r = [0] * 16
            for k, pos in enumerate(support):
                r[pos] = 1 - 2 * word[k]
            rows.append(tuple(r))
    return LineSystem.from_vectors(rows, 6)


def circulant36_lines() -> LineSystem:
    """36 lines in R^7 at cosines 1/7 and 3/7, all orthogonal to the diagonal.

    One exceptional row plus cyclic shifts of five seed rows, every row
    of squared norm 56 and coordinate sum zero in R^8; the Gram values
    are +-8/56 and +-24/56.
    """
    def shifts(head, seed):
        out = []
        for i in range(7):
            out.append((head,) + tuple(seed[(j - i) % 7] for j in range(7)))
        return out

    rows = [(-7, 1, 1, 1, 1, 1, 1, 1)]
    rows += shifts(1, (-7, 1, 1, 1, 1, 1, 1))
    rows += shifts(1, (-1, 3, 3, -3, 3, -3, -3))
    rows += shifts(3, (1, -1, -3, 3, 3, -3, -3))
    rows += shifts(3, (1, 3, -1, -3, -3, -3, 3))
    rows += shifts(3, (-1, 3, -3, 1, -3, 3, -3))
    for r in rows:
        if sum(r) != 0:
            raise RuntimeError("a seed row is not orthogonal to the diagonal")
    return LineSystem.from_vectors(rows, 56)


def cell24_lines() -> LineSystem:
    """The 24 diagonals of the 24-cell: cosines {0, 1/2, 1/sqrt(2)} in R^4.

    Unit representatives: the eight (+-1, +-1, +-1, 1)/2 vertices with
    positive last coordinate, the four coordinate axes, and the twelve
    (e_i +- e_j)/sqrt(2).
    """
    half = Fraction(1, 2)
    inv_rt2 = QuadExt(0, half, 2)
    rows = []
    for signs in product((half, -half), repeat=3):
        rows.append(signs + (half,))
    for i in range(4):
        rows.append(tuple(Fraction(int(i == k)) for k in range(4)))
    for i, j in combinations(range(4), 2):
        for sign in (1, -1):
            r = [QuadExt(0)] * 4
            r[i] = inv_rt2
            r[j] = inv_rt2 * sign
            rows.append(tuple(r))
    return LineSystem.from_unit_vectors(rows)


def triangular_lines(d: int) -> LineSystem:
    """4*C(d, 3) lines at cosines {0, +-1/3, +-2/3} in R^d.

    Rows are the sign patterns of (+-1, +-1, +-1, 0, ..., 0) with first
    nonzero coordinate positive, one quadruple per coordinate triple;
    supports sharing two coordinates contribute the +-2/3 products.
    """
    if d < 3:
        raise ValueError("need at least three coordinates")
    rows = []
    for support in combinations(range(d), 3):
        for s1, s2 in product((1, -1), repeat=2):
            r = [0] * d
            r[support[0]] = 1
            r[support[1]] = s1
            r[support[2]] = s2
            rows.append(tuple(r))
    return LineSystem.from_vectors(rows, 3)


def certified_instances() -> dict:
    """Named line systems with exact hand-checked coordinates or Grams.

    Every entry is verified on construction: Gram entries drawn from the
    stated values, matrix positive semidefinite of the stated rank.
    """
    out = {}
    for name, (pattern, d, values) in solved_instances().items():
        gram = gram_at(pattern, values)
        system = LineSystem.from_gram(gram, source="constructed")
        if system.d != d:
            raise RuntimeError(f"{name}: rank {system.d} != {d}")
        out[name] = system
    out["24cell-diagonals"] = cell24_lines()
    out["triangular-40-r5"] = triangular_lines(5)
    return out
