import json
import random
from fractions import Fraction

import numpy as np
import pytest

from linesys.gram import transform
from linesys.instances import (
    DODECAHEDRON_10,
    ICOSIDODECAHEDRON_15,
    PENTAGON_5,
    PETERSEN_10,
    TRUNCATED_CUBE_12,
)
from linesys.keyeq import rank_system, solvability
from linesys.quadratic import QuadExt
from linesys.search import SearchConfig, run_search
from linesys.gram import BIANGULAR
from linesys.solve import (
    EMPTY,
    FAMILY,
    FINITE,
    LineSystem,
    gram_at,
    is_psd,
    isometric,
    psd_rank,
    rank_exact,
    solve_candidate,
    verify_system,
)

F = Fraction
R2 = QuadExt.sqrt(2)
R5 = QuadExt.sqrt(5)


# -- exact linear algebra ------------------------------------------------------


def test_rank_exact_promotes_integer_rows():
    # 2/3 must not floor to 0 during elimination
    assert rank_exact([[3, 2], [2, 3]]) == 2
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[2, 4, 6], [3, 6, 9], [1, 0, 1]]) == 2
    assert rank_exact([]) == 0


def test_psd_rank_basics():
    assert psd_rank([[F(1), F(0)], [F(0), F(0)]]) == 1
    assert psd_rank([[F(0), F(1)], [F(1), F(0)]]) is None
    assert psd_rank([[F(-1)]]) is None
    assert psd_rank([[F(1), F(1)], [F(1), F(1)]]) == 1
    half = F(1, 2)
    assert psd_rank([[F(1), half], [half, F(1)]]) == 2


def test_is_psd_matches_floating_oracle():
    rng = random.Random(2024)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 6)
        A = [[F(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n)]
             for _ in range(n)]
        if rng.random() < 0.5:
            M = [[sum(A[i][k] * A[j][k] for k in range(n)) for j in range(n)]
                 for i in range(n)]
        else:
            M = [[A[i][j] + A[j][i] if i != j else A[i][i] for j in range(n)]
                 for i in range(n)]
        eigs = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in M]))
        if abs(eigs[0]) < 1e-9:  # too close to the boundary to trust floats
            continue
        assert is_psd(M) == (eigs[0] > 0), M
        checked += 1


# -- LineSystem construction ---------------------------------------------------


def test_from_gram_validation():
    with pytest.raises(ValueError, match="diagonal"):
        LineSystem.from_gram(((F(2), F(0)), (F(0), F(1))))
    with pytest.raises(ValueError, match="asymmetric"):
        LineSystem.from_gram(((F(1), F(0)), (F(1, 2), F(1))))
    with pytest.raises(ValueError, match="positive semidefinite"):
        LineSystem.from_gram(((F(1), F(2)), (F(2), F(1))))
    with pytest.raises(ValueError, match="antipodal"):
        LineSystem.from_gram(((F(1), F(-1)), (F(-1), F(1))))
    sys_ = LineSystem.from_gram(((F(1), F(1, 3)), (F(1, 3), F(1))))
    assert (sys_.n, sys_.d) == (2, 2)
    assert sys_.angles == frozenset({F(1, 3)})
    assert sys_.is_m_angular(1) and not sys_.is_m_angular(0)


def test_from_vectors_checks_norms():
    with pytest.raises(ValueError, match="squared norm"):
        LineSystem.from_vectors([(1, 1), (1, 0)], 2)
    sys_ = LineSystem.from_vectors([(1, 1), (1, -1)], 2)
    assert sys_.d == 2 and sys_.angles == frozenset({F(0)})


def test_from_unit_vectors_checks_norms():
    with pytest.raises(ValueError, match="unit"):
        LineSystem.from_unit_vectors([(F(1, 2), F(1, 2))])
    h = QuadExt(0, F(1, 2), 2)  # 1/sqrt(2)
    sys_ = LineSystem.from_unit_vectors([(h, h), (QuadExt(1), QuadExt(0))])
    assert sys_.d == 2 and sys_.angles == frozenset({h})


# -- solved instances ----------------------------------------------------------


def test_pentagon_solve():
    rep = solve_candidate(PENTAGON_5, 2)
    assert rep.kind == FINITE
    assert not rep.unresolved and len(rep.roots) == 2
    values = {frozenset(r.values.values()) for r in rep.roots}
    assert values == {frozenset({(R5 - 1) / 4, (-R5 - 1) / 4})}
    for r in rep.roots:
        assert r.rank == 2 and r.psd
        # the two symbols sum to -1/2 in either root
        assert sum(r.values.values()) == F(-1, 2)
    assert isometric(rep.roots[0].gram, rep.roots[1].gram)


def test_dodecahedron_solve():
    rep = solve_candidate(DODECAHEDRON_10, 3, principal_only=True)
    assert rep.kind == FINITE and len(rep.roots) == 2
    for r in rep.roots:
        assert r.values[1] == F(1, 3)
        assert r.values[2] * r.values[2] == F(5, 9)
        assert r.rank == 3 and r.psd


def test_truncated_cube_solve():
    rep = solve_candidate(TRUNCATED_CUBE_12, 3, principal_only=True)
    assert rep.kind == FINITE and len(rep.roots) == 2
    seen = set()
    for r in rep.roots:
        alpha = r.values[1]
        assert 17 * alpha + 7 in (4 * R2, -4 * R2)
        sign = 1 if 17 * alpha + 7 == 4 * R2 else -1
        assert r.values[2] == (5 + sign * 2 * R2) / 17
        assert r.values[3] == (-3 - sign * 8 * R2) / 17
        assert r.rank == 3 and r.psd
        seen.add(sign)
    assert seen == {1, -1}


def test_icosidodecahedron_solve():
    rep = solve_candidate(ICOSIDODECAHEDRON_15, 3, principal_only=True)
    assert rep.kind == FINITE and len(rep.roots) == 2
    for r in rep.roots:
        alpha, beta, gamma = r.values[1], r.values[2], r.values[3]
        assert 4 * alpha * alpha - 2 * alpha - 1 == 0
        assert beta == F(1, 2) - alpha
        assert gamma == F(1, 2)
        assert r.rank == 3 and r.psd


def test_back_substitution_zero_on_finite_reports():
    for C, d in ((PENTAGON_5, 2), (DODECAHEDRON_10, 3)):
        gens = rank_system(C, 2, d, principal_only=True)
        rep = solve_candidate(C, d, principal_only=True)
        assert rep.roots
        for r in rep.roots:
            point = [r.values[1], r.values[2], QuadExt(0)]
            assert all(g.evaluate(point) == 0 for g in gens)


# -- the one-parameter family --------------------------------------------------


PETERSEN_RELATIONS = [
    "a1^2-1/4*a2^2-1/3*a1-1/3*a2-1/12",
    "a1*a2-1/2*a2^2+2/3*a1-5/6*a2-1/3",
]


def test_petersen_family_relations():
    rep = solve_candidate(PETERSEN_10, 5, principal_only=True)
    assert rep.kind == FAMILY
    assert rep.relations == PETERSEN_RELATIONS


def test_petersen_generators_vanish_along_family():
    gens = rank_system(PETERSEN_10, 2, 5, principal_only=True)
    for s in (F(1, 6), F(1, 4), F(1, 2), F(9, 10)):
        point = [s, 2 * s - 1, F(0)]
        assert all(g.evaluate(point) == 0 for g in gens)
    off = [F(1, 2), F(1, 2), F(0)]  # not on the line beta = 2*alpha - 1
    assert any(g.evaluate(off) != 0 for g in gens)


def test_petersen_psd_window():
    ranks = {}
    for s in (F(0), F(1, 8), F(1, 6), F(1, 4), F(1, 2), F(9, 10)):
        ranks[s] = psd_rank(gram_at(PETERSEN_10, {1: s, 2: 2 * s - 1}))
    assert ranks[F(0)] is None and ranks[F(1, 8)] is None
    assert ranks[F(1, 6)] == 4  # boundary of the window drops the rank
    assert ranks[F(1, 4)] == ranks[F(1, 2)] == ranks[F(9, 10)] == 5


# -- isometry ------------------------------------------------------------------


def test_isometric_distinguishes_conjugate_twelves():
    from linesys.constructions import certified_instances

    inst = certified_instances()
    a, b = inst["twelve-r4-a"], inst["twelve-r4-b"]
    assert isometric(a.gram, a.gram)
    assert not isometric(a.gram, b.gram)  # angle magnitudes already differ
    assert not isometric(a.gram, inst["pentagon-5"].gram)  # size mismatch


# -- empty and degenerate candidates -------------------------------------------


def test_all_orthogonal_pattern_needs_no_symbols():
    C = ((0, 0), (0, 0))
    rep = solve_candidate(C, 2)
    assert rep.kind == FINITE and len(rep.roots) == 1
    assert rep.roots[0].values == {} and rep.roots[0].rank == 2


def test_triangle_of_alphas_infeasible_in_one_dimension():
    C = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    rep = solve_candidate(C, 1)
    assert rep.kind == EMPTY


# -- verdict machinery ---------------------------------------------------------


def test_solvability_verdict_survives_symbol_relabel():
    reports = run_search(SearchConfig(alphabet=BIANGULAR, dim=2))
    swap = {1: 2, 2: 1}
    checked = 0
    for report in reports:
        if report.n < 3:
            continue
        for C in report.classes:
            relabeled = transform(C, tuple(range(report.n)),
                                  (1,) * report.n, swap)
            for principal in (False, True):
                assert solvability(relabeled, 2, 2, principal_only=principal) \
                    == solvability(C, 2, 2, principal_only=principal)
            checked += 1
    assert checked >= 3


def test_verify_system_verdicts():
    sys_ = LineSystem.from_gram(((F(1), F(1, 3)), (F(1, 3), F(1))))
    ok = verify_system(sys_, {"n": 2, "d": 2, "angles": {F(1, 3)},
                              "m_angular": 1})
    assert ok.ok
    bad = verify_system(sys_, {"n": 3, "angles_subset": {F(0)}})
    assert not bad.ok
    names = {c.name: c.ok for c in bad.checks}
    assert names["n"] is False and names["angles_subset"] is False
    payload = json.loads(bad.to_json())
    assert payload["ok"] is False
    assert any(c["name"] == "n" and "claimed 3" in c["detail"]
               for c in payload["checks"])


def test_solution_report_json_round_trip():
    rep = solve_candidate(PENTAGON_5, 2)
    payload = json.loads(rep.to_json())
    assert payload["id"].startswith("n5d2:")
    assert payload["kind"] == FINITE
    assert len(payload["roots"]) == 2
    for root in payload["roots"]:
        assert root["psd"] is True and root["rank"] == 2
        assert set(root["values"]) == {"a1", "a2"}
    assert payload["unresolved"] == []
