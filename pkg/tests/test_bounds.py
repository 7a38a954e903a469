from fractions import Fraction

import pytest

from linesys.bounds import (
    absolute_bound,
    best_known,
    design_sum_check,
    relative_bound,
    z_integrality,
)
from linesys.constructions import (
    certified_instances,
    circulant36_lines,
    dd_lattice_lines,
    exceptional_root_lines,
    one_third_witness,
)
from linesys.quadratic import QuadExt
from linesys.solve import LineSystem

F = Fraction
RT5_THIRD = QuadExt(0, F(1, 3), 5)
INV_RT5 = QuadExt(0, F(1, 5), 5)


def test_absolute_bound_values():
    assert absolute_bound(2) == 5
    assert absolute_bound(3) == 15
    assert absolute_bound(6) == 126
    with pytest.raises(ValueError):
        absolute_bound(0)


def test_relative_bound_dodecahedron():
    rep = relative_bound(3, F(1, 3), RT5_THIRD, 10)
    assert rep.applicable and rep.sum_condition
    assert rep.bound == 10
    assert rep.equality
    assert rep.n_alpha == 60
    assert rep.n_alpha_integral and rep.n_alpha_nonnegative
    assert rep.second_condition
    assert rep.feasible


def test_relative_bound_mclaughlin():
    rep = relative_bound(22, F(1, 6), F(1, 4), 275)
    assert rep.bound == 275
    assert rep.equality
    assert rep.n_alpha == 44550
    assert rep.second_condition
    assert rep.feasible


def test_relative_bound_screens_out_fifty_lines():
    rep = relative_bound(8, F(1, 4), F(1, 2), 50)
    assert rep.bound == 50
    assert rep.equality
    assert rep.n_alpha == F(5600, 3)
    assert rep.n_alpha_integral is False
    assert rep.feasible is False


def test_relative_bound_rejects_bad_input():
    with pytest.raises(ValueError):
        relative_bound(2, F(1, 3), F(1, 2))
    with pytest.raises(ValueError):
        relative_bound(5, F(1, 3), F(3, 2))


# every published system meeting the relative bound, by parameters
EQUALITY_ROWS = [
    (3, 6, INV_RT5, INV_RT5),
    (3, 10, F(1, 3), RT5_THIRD),
    (4, 12, F(0), F(1, 2)),
    (6, 27, F(1, 4), F(1, 2)),
    (6, 36, F(0), F(1, 2)),
    (7, 28, F(1, 3), F(1, 3)),
    (7, 36, F(1, 7), F(3, 7)),
    (7, 63, F(0), F(1, 2)),
    (8, 120, F(0), F(1, 2)),
    (16, 144, F(0), F(1, 4)),
    (16, 256, F(0), F(1, 3)),
    (22, 275, F(1, 6), F(1, 4)),
    (22, 1408, F(0), F(1, 3)),
    (23, 276, F(1, 5), F(1, 5)),
    (23, 2300, F(0), F(1, 3)),
    (64, 2112, F(0), F(1, 8)),  # unbiased-bases family at i = 3
]


def test_relative_bound_equality_rows():
    for d, n, alpha, beta in EQUALITY_ROWS:
        rep = relative_bound(d, alpha, beta, n)
        assert rep.applicable, (d, n)
        assert rep.equality, (d, n, rep.bound)
        if rep.n_alpha is not None:
            assert rep.feasible, (d, n, rep.n_alpha)
            assert rep.second_condition, (d, n)


def test_constructed_systems_meet_relative_bound():
    def params(system):
        squared = sorted(set(v * v for v in system.angles))
        values = [QuadExt.sqrt(s) if isinstance(s, Fraction) else s
                  for s in squared]
        if len(values) == 1:
            values = values * 2
        return values[0], values[1]

    systems = [dd_lattice_lines(4), circulant36_lines(),
               exceptional_root_lines("E6"), exceptional_root_lines("E7"),
               exceptional_root_lines("E8"),
               certified_instances()["twentyseven-r6-a"],
               one_third_witness(7).line_system()]
    for system in systems:
        alpha, beta = params(system)
        rep = relative_bound(system.d, alpha, beta, system.n)
        assert rep.equality, (system.n, system.d)


def test_z_integrality_examples():
    rep = z_integrality(5, F(1, 5), F(3, 5))
    assert rep == {"z": 3, "integer": True, "cap": 3, "within": True}
    rep = z_integrality(6, F(1, 5), F(3, 5))
    assert rep["z"] == 3 and rep["integer"]
    rep = z_integrality(5, 0, F(1, 2))
    assert rep["z"] == 4
    assert rep["within"] is False  # exceeds the cap of 3
    with pytest.raises(ValueError):
        z_integrality(4, F(1, 5), F(3, 5))
    with pytest.raises(ValueError):
        z_integrality(5, F(3, 5), F(1, 5))


def test_design_sums_dodecahedron_vanish():
    system = certified_instances()["dodecahedron-10"]
    assert design_sum_check(system) == {2: True, 4: True}


def test_design_sums_single_line():
    # one line spans d=1; its antipodal double covers the 0-sphere,
    # which is as tight as designs get
    single = LineSystem(gram=((F(1),),), n=1, d=1,
                        angles=frozenset(), source="file")
    assert design_sum_check(single) == {2: True, 4: True}


def test_design_sums_generic_pair_nonzero():
    gram = ((F(1), F(3, 5)), (F(3, 5), F(1)))
    pair = LineSystem(gram=gram, n=2, d=2,
                      angles=frozenset({F(3, 5)}), source="file")
    assert design_sum_check(pair) == {2: False, 4: False}


def test_design_sums_octagon_vanish():
    # the four diagonals of the regular octagon double to the octagon
    # itself, a tight design on the circle: direct evaluation gives zero
    h = QuadExt(0, F(1, 2), 2)
    z = QuadExt(0)
    gram = ((QuadExt(1), h, z, -h),
            (h, QuadExt(1), h, z),
            (z, h, QuadExt(1), h),
            (-h, z, h, QuadExt(1)))
    octagon = LineSystem(gram=gram, n=4, d=2,
                         angles=frozenset({h, -h, z}), source="file")
    assert design_sum_check(octagon) == {2: True, 4: True}
    with pytest.raises(ValueError):
        design_sum_check(octagon, orders=(3,))


def test_best_known_table():
    assert (best_known(6).count, best_known(6).exact) == (40, True)
    assert best_known(14).count == 392
    assert best_known(23).count == 2300
    assert best_known(2).count == 5
    assert all(not best_known(d).exact for d in range(7, 40))
    assert best_known(36).count == 2 * 35 * 34
    with pytest.raises(ValueError):
        best_known(1)


def test_best_known_dominates_absolute_and_constructions():
    for d in range(2, 36):
        assert absolute_bound(d) >= best_known(d).count
    biangular = [dd_lattice_lines(4), circulant36_lines(),
                 exceptional_root_lines("E8")]
    for system in biangular:
        assert best_known(system.d).count >= system.n
