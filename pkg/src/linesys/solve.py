"""From surviving patterns to certified line systems.

Solving a pattern means finding every admissible assignment of exact values
to its angle symbols that drops the symbolic Gram matrix to rank at most d.
The saturated polynomial system (see keyeq) governs everything:

* trivial saturated ideal        -> no admissible solutions at all;
* zero-dimensional ideal         -> finitely many assignments, recovered
                                    variable by variable from eliminants
                                    whose roots live in Q or Q(sqrt(m));
* positive-dimensional ideal     -> an infinite family, reported through
                                    its defining relations with the
                                    auxiliary variable eliminated.

Roots are kept only when they are real, satisfy every generator exactly and
stay off the excluded locus (no symbol value in {0, 1, -1}, no two symbols
with equal squares).  Eliminant factors of degree three or more are never
guessed at: they are reported with isolating rational intervals and the
whole report is flagged unresolved.

Ranks and positive semidefiniteness of the resulting exact Gram matrices
are decided by elimination in the quadratic field, with no floating point
anywhere.  A zero pivot is legal in a PSD matrix only when its entire row
is already zero; a negative pivot is a witness against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .factor import factor_polynomial, isolate_real_roots
from .gram import Matrix, canonical_form, vec_of
from .groebner import (
    DEFAULT_BUDGET,
    eliminant,
    elimination_ideal,
    is_trivial_ideal,
    is_zero_dimensional,
)
from .keyeq import rank_system, saturated_groebner, variable_names
from .polynomials import univariate_coeffs
from .quadratic import QuadExt

EMPTY, FINITE, FAMILY = "empty", "finite", "positive_dimensional"

Value = QuadExt | Fraction | int
QMatrix = tuple[tuple[Value, ...], ...]


# -- exact linear algebra ------------------------------------------------------


def rank_exact(M) -> int:
    """Rank by Gaussian elimination; entries from any common field.

    Integer entries are promoted to Fraction up front: int / int would
    silently drop to floating point and fabricate rank from roundoff.
    """
    rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in M]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / pivot
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _sign(x) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def psd_rank(M) -> int | None:
    """Positive pivot count of a symmetric matrix, or None when not PSD.

    Symmetric elimination: a negative diagonal pivot refutes immediately;
    a zero diagonal pivot is tolerable only with a fully zero residual row
    (otherwise some 2x2 principal minor is negative).
    """
    A = [list(r) for r in M]
    n = len(A)
    rank = 0
    for k in range(n):
        s = _sign(A[k][k])
        if s < 0:
            return None
        if s == 0:
            if any(A[k][j] for j in range(k + 1, n)):
                return None
            continue
        rank += 1
        pivot = A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / pivot
            if f:
                row_k = A[k]
                row_i = A[i]
                for j in range(k + 1, n):
                    row_i[j] = row_i[j] - f * row_k[j]
    return rank


def is_psd(M) -> bool:
    return psd_rank(M) is not None


# -- realized line systems -----------------------------------------------------


@dataclass(frozen=True)
class LineSystem:
    """A realized system: exact Gram matrix, rank, inner-product set."""

    gram: QMatrix
    n: int
    d: int
    angles: frozenset
    source: str = "file"

    @classmethod
    def from_gram(cls, gram, source: str = "file") -> "LineSystem":
        n = len(gram)
        for i in range(n):
            if gram[i][i] != 1:
                raise ValueError(f"diagonal entry ({i},{i}) is not 1")
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError(f"asymmetric entries at ({i},{j})")
        rank = psd_rank(gram)
        if rank is None:
            raise ValueError("matrix is not positive semidefinite")
        angles = frozenset(gram[i][j] for i in range(n) for j in range(i))
        if any(v == -1 for v in angles):
            raise ValueError("antipodal pair: -1 is not a line angle")
        frozen = tuple(tuple(row) for row in gram)
        return cls(frozen, n, rank, angles, source)

    @classmethod
    def from_vectors(cls, rows, scale: int, source: str = "constructed") -> "LineSystem":
        """Integer coordinate rows; the unit representatives are rows/sqrt(scale).

        The Gram matrix is rational and positive semidefinite by
        construction, and its rank equals the rank of the coordinate
        matrix, which is cheap to compute exactly.
        """
        rows = [tuple(int(x) for x in r) for r in rows]
        n = len(rows)
        gram = []
        for i, r in enumerate(rows):
            norm = sum(x * x for x in r)
            if norm != scale:
                raise ValueError(f"row {i} has squared norm {norm}, not {scale}")
            gram.append(tuple(Fraction(sum(x * y for x, y in zip(r, s)), scale)
                              for s in rows))
        gram = tuple(gram)
        angles = frozenset(gram[i][j] for i in range(n) for j in range(i))
        if any(v == -1 for v in angles):
            raise ValueError("antipodal pair among the vectors")
        return cls(gram, n, rank_exact(rows), angles, source)

    @classmethod
    def from_unit_vectors(cls, rows, source: str = "constructed") -> "LineSystem":
        """Exact unit vectors with QuadExt or rational coordinates."""
        rows = [tuple(r) for r in rows]
        n = len(rows)
        for i, r in enumerate(rows):
            if sum(x * x for x in r) != 1:
                raise ValueError(f"row {i} is not a unit vector")
        gram = tuple(tuple(sum(x * y for x, y in zip(r, s)) for s in rows)
                     for r in rows)
        angles = frozenset(gram[i][j] for i in range(n) for j in range(i))
        if any(v == -1 for v in angles):
            raise ValueError("antipodal pair among the vectors")
        return cls(gram, n, rank_exact(rows), angles, source)

    def squared_angles(self) -> frozenset:
        return frozenset(v * v for v in self.angles)

    def is_m_angular(self, m: int) -> bool:
        return len(self.squared_angles()) <= m


# -- solution extraction ---------------------------------------------------------


@dataclass
class RootRecord:
    values: dict[int, QuadExt]  # symbol index (1-based) -> exact value
    gram: QMatrix
    rank: int
    psd: bool


@dataclass
class UnresolvedFactor:
    variable: str
    coeffs: list[Fraction]  # ascending; an irreducible factor of degree >= 3
    intervals: list[tuple[Fraction, Fraction]]


@dataclass
class SolutionReport:
    candidate: Matrix
    dim: int
    kind: str
    roots: list[RootRecord] = field(default_factory=list)
    relations: list[str] = field(default_factory=list)
    unresolved: list[UnresolvedFactor] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def candidate_id(self) -> str:
        v = vec_of(self.candidate)
        codes = ",".join(str(c) for c in v) if v else "-"
        return f"n{len(self.candidate)}d{self.dim}:{codes}"

    def to_json(self) -> str:
        payload = {
            "id": self.candidate_id,
            "n": len(self.candidate),
            "dim": self.dim,
            "kind": self.kind,
            "roots": [
                {
                    "values": {f"a{k}": str(v) for k, v in sorted(r.values.items())},
                    "rank": r.rank,
                    "psd": r.psd,
                }
                for r in self.roots
            ],
            "relations": self.relations,
            "unresolved": [
                {
                    "variable": u.variable,
                    "coeffs": [str(c) for c in u.coeffs],
                    "intervals": [[str(a), str(b)] for a, b in u.intervals],
                }
                for u in self.unresolved
            ],
            "notes": self.notes,
        }
        return json.dumps(payload, indent=2)


def gram_at(C: Matrix, values: dict[int, Value]) -> QMatrix:
    """Realize a pattern: code +-k becomes +-values[k], diagonal becomes 1."""
    n = len(C)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Fraction(1))
                continue
            c = C[i][j]
            if c == 0:
                row.append(Fraction(0))
            else:
                v = values[abs(c)]
                row.append(v if c > 0 else -v)
        out.append(tuple(row))
    return tuple(out)


def _admissible(values: dict[int, QuadExt]) -> bool:
    items = sorted(values.items())
    for _, v in items:
        if not v or v * v == 1:
            return False
    squares = [v * v for _, v in items]
    for i in range(len(squares)):
        for j in range(i + 1, len(squares)):
            if squares[i] == squares[j]:
                return False
    return True


def _root_sort_key(v: QuadExt):
    return (float(v), str(v))


def solve_candidate(C: Matrix, d: int, m: int | None = None,
                    budget: int = DEFAULT_BUDGET,
                    principal_only: bool = False) -> SolutionReport:
    """Exact solutions of a pattern's rank-d system, classified by kind.

    `m` defaults to the largest symbol present; patterns out of the search
    pipeline use symbols 1..m consecutively, which is what the variable
    layout assumes.

    `principal_only=True` generates the rank system from principal
    (d+1)-minors alone, which cuts the generator count from roughly
    C(n, d+1)^2 to C(n, d+1).  This stays sound: a symmetric real matrix
    has rank <= d exactly when all its principal (d+1)x(d+1) minors
    vanish, so real solutions are unchanged, an empty verdict still means
    no real rank-<=d point exists, and every extracted root is re-checked
    concretely against the realized Gram matrix below.
    """
    symbols = sorted({abs(c) for row in C for c in row if c})
    if m is None:
        m = symbols[-1] if symbols else 0
    if not symbols:
        gram = gram_at(C, {})
        rank = psd_rank(gram)
        return SolutionReport(C, d, FINITE,
                              roots=[RootRecord({}, gram, rank_exact(gram),
                                                rank is not None)])
    gens = rank_system(C, m, d, principal_only=principal_only)
    if not gens:
        report = SolutionReport(C, d, FAMILY)
        report.notes.append("no rank constraints at this size; any admissible "
                            "assignment works")
        return report
    nvars = m + 1
    if any(g.is_constant for g in gens):
        return SolutionReport(C, d, EMPTY)
    sym_set = frozenset(symbols)
    gb, order = saturated_groebner(gens, sym_set, m, budget)
    if is_trivial_ideal(gb):
        return SolutionReport(C, d, EMPTY)
    if not is_zero_dimensional(gb, order, nvars):
        relations = elimination_ideal(gb, {m}, nvars, budget)
        names = variable_names(m)
        report = SolutionReport(C, d, FAMILY)
        report.relations = [p.to_string(names) for p in relations]
        return report
    report = SolutionReport(C, d, FINITE)
    per_var: list[list[QuadExt]] = []
    for k in symbols:
        g = eliminant(gb, k - 1, nvars, budget, first=m)
        coeffs = univariate_coeffs(g, k - 1)
        fac = factor_polynomial(coeffs)
        roots = sorted({r for r, _ in fac.all_real_roots()}, key=_root_sort_key)
        per_var.append(roots)
        for res, _ in fac.residual:
            ints = isolate_real_roots(res)
            report.unresolved.append(
                UnresolvedFactor(f"a{k}", list(res), [(a, b) for a, b in ints]))
    if report.unresolved:
        report.notes.append("some eliminant factors have degree >= 3; their "
                            "roots are isolated but not extracted")
    for combo in product(*per_var):
        values = {k: v for k, v in zip(symbols, combo)}
        if not _admissible(values):
            continue
        try:
            point = [values.get(k + 1, QuadExt(0)) for k in range(m)] + [QuadExt(0)]
            if any(g.evaluate(point) != 0 for g in gens):
                continue
            gram = gram_at(C, values)
            rank = psd_rank(gram)
            report.roots.append(RootRecord(values, gram,
                                           rank_exact(gram),
                                           rank is not None))
        except ValueError:
            report.notes.append(
                "assignment mixing incompatible quadratic fields skipped: "
                + ", ".join(f"a{k}={v}" for k, v in sorted(values.items())))
    return report


# -- isometry of realized systems ------------------------------------------------


def _value_codes(grams: list[QMatrix]):
    """Encode values as symbols consistently across several matrices.

    Values are paired with their negatives; each pair gets one symbol, the
    positive member mapping to the positive code.  The shared encoding makes
    signed-permutation equivalence of the encodings the same thing as
    congruence of the matrices by a signed permutation.
    """
    reps = []
    for G in grams:
        for i in range(len(G)):
            for j in range(i):
                v = G[i][j]
                if v and abs(v) not in reps:
                    reps.append(abs(v))
    reps.sort(key=_root_sort_key)
    code_of = {}
    for k, v in enumerate(reps, start=1):
        code_of[v] = k
        code_of[-v] = -k
    coded = []
    for G in grams:
        n = len(G)
        coded.append(tuple(
            tuple(0 if i == j or not G[i][j] else code_of[G[i][j]]
                  for j in range(n))
            for i in range(n)))
    return coded, len(reps)


def isometric(A: QMatrix, B: QMatrix) -> bool:
    """Are two exact Gram matrices related by a signed permutation?"""
    if len(A) != len(B):
        return False
    values_a = sorted((abs(A[i][j]) for i in range(len(A)) for j in range(i)),
                      key=_root_sort_key)
    values_b = sorted((abs(B[i][j]) for i in range(len(B)) for j in range(i)),
                      key=_root_sort_key)
    if values_a != values_b:
        return False
    (ca, cb), m = _value_codes([A, B])
    return (canonical_form(ca, m, allow_relabel=False)
            == canonical_form(cb, m, allow_relabel=False))


# -- verification of supplied systems ---------------------------------------------


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerdictReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append(CheckResult(name, bool(ok), detail))

    def to_json(self) -> str:
        return json.dumps({
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                       for c in self.checks],
        }, indent=2)


def verify_system(system: LineSystem, claims: dict) -> VerdictReport:
    """Check a realized system against stated claims.

    Recognised claim keys: n (line count), d (exact rank), angles (exact
    set), angles_subset (containment), m_angular (squared-value budget).
    PSD and the -1 exclusion hold for every constructible LineSystem and
    are reported as checks anyway, for the record.
    """
    rep = VerdictReport()
    rep.add("psd", True, "positive semidefinite by construction")
    rep.add("no_antipodal", all(v != -1 for v in system.angles))
    if "n" in claims:
        rep.add("n", system.n == claims["n"],
                f"found {system.n}, claimed {claims['n']}")
    if "d" in claims:
        rep.add("d", system.d == claims["d"],
                f"found rank {system.d}, claimed {claims['d']}")
    if "angles" in claims:
        want = frozenset(claims["angles"])
        rep.add("angles", system.angles == want,
                f"found {{{_render_angles(system.angles)}}}")
    if "angles_subset" in claims:
        want = frozenset(claims["angles_subset"])
        rep.add("angles_subset", system.angles <= want,
                f"found {{{_render_angles(system.angles)}}}")
    if "m_angular" in claims:
        k = len(system.squared_angles())
        rep.add("m_angular", k <= claims["m_angular"],
                f"{k} distinct squared values")
    return rep


def _render_angles(angles) -> str:
    return ", ".join(str(v) for v in sorted(angles, key=_root_sort_key))
