import itertools
import random

from linesys.gram import (
    BIANGULAR,
    TRIANGULAR,
    Alphabet,
    augment_children,
    canonical_form,
    greedy_relabel_vec,
    has_smaller_image,
    has_zero_entry,
    is_canonical,
    key_table,
    mat_from_vec,
    random_image,
    symbols_used,
    transform,
    vec_of,
    zero_free,
)


def test_key_table():
    key = key_table(2)
    assert key[0] == 0
    assert key[1] == 1 and key[-1] == 2
    assert key[2] == 3 and key[-2] == 4
    key3 = key_table(3)
    assert [key3[c] for c in (0, 1, -1, 2, -2, 3, -3)] == [0, 1, 2, 3, 4, 5, 6]


def test_vec_roundtrip():
    v = (1, 0, -2, 1, 1, 0)
    C = mat_from_vec(v, 4)
    assert vec_of(C) == v
    assert C[0][2] == C[2][0] == 0
    assert C[3][1] == -2 or C[2][1] == -2  # placement per row-major lower triangle


def test_greedy_relabel():
    # first-use order, first occurrence forced positive
    assert greedy_relabel_vec([-2, 0, 2, 1, -1], 2) == [1, 0, -1, 2, -2]
    assert greedy_relabel_vec([0, 0], 2) == [0, 0]


# -- brute-force oracle ------------------------------------------------------


def _all_relabels(m):
    for pi in itertools.permutations(range(1, m + 1)):
        for flips in itertools.product((1, -1), repeat=m):
            yield {k: flips[k - 1] * pi[k - 1] for k in range(1, m + 1)}


def brute_canonical(C, m):
    key = key_table(m)
    n = len(C)
    best = None
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            for rel in _all_relabels(m):
                img = transform(C, perm, signs, rel)
                kv = tuple(key[c] for c in vec_of(img))
                if best is None or kv < best[0]:
                    best = (kv, img)
    return best[1]


def _all_matrices(n, m):
    codes = [0] + [s * k for k in range(1, m + 1) for s in (1, -1)]
    nv = n * (n - 1) // 2
    for v in itertools.product(codes, repeat=nv):
        yield mat_from_vec(v, n)


def test_canonical_form_matches_brute_force_3x3():
    m = 2
    mine, brute = set(), set()
    for C in _all_matrices(3, m):
        if not BIANGULAR.admits(C):
            continue
        cf = canonical_form(C, m)
        assert BIANGULAR.admits(cf)
        assert cf == brute_canonical(C, m)
        assert is_canonical(cf, m)
        mine.add(cf)
        brute.add(cf)
    # the five biangular classes on three lines
    assert len(mine) == 5


def test_canonical_form_matches_brute_force_4x4_sampled():
    rng = random.Random(101)
    m = 2
    codes = [0, 1, -1, 2, -2]
    for _ in range(60):
        v = tuple(rng.choice(codes) for _ in range(6))
        C = mat_from_vec(v, 4)
        assert canonical_form(C, m) == brute_canonical(C, m)


def test_orbit_invariance_random():
    rng = random.Random(2024)
    for trial in range(200):
        n = rng.randint(2, 6)
        m = rng.choice([2, 3])
        codes = [0] + [s * k for k in range(1, m + 1) for s in (1, -1)]
        v = tuple(rng.choice(codes) for _ in range(n * (n - 1) // 2))
        C = mat_from_vec(v, n)
        cf = canonical_form(C, m)
        img = random_image(C, m, rng)
        assert canonical_form(img, m) == cf
        if vec_of(img) != vec_of(C) or not is_canonical(C, m):
            assert has_smaller_image(img, m) or vec_of(img) == vec_of(cf)


def test_no_relabel_mode():
    C = mat_from_vec((2,), 2)
    assert canonical_form(C, 2) == mat_from_vec((1,), 2)
    assert canonical_form(C, 2, allow_relabel=False) == C
    D = mat_from_vec((-2,), 2)
    assert canonical_form(D, 2, allow_relabel=False) == C  # sign flip only


# -- growth ------------------------------------------------------------------


def _grow_counts(alphabet, upto):
    level = [()]
    counts = []
    for _ in range(upto):
        nxt = []
        for parent in level:
            nxt.extend(augment_children(parent, alphabet))
        counts.append(len(nxt))
        level = nxt
    return counts, level


def test_biangular_growth_counts():
    counts, _ = _grow_counts(BIANGULAR, 5)
    assert counts == [1, 2, 5, 25, 194]


def test_triangular_and_zerofree_3x3():
    counts, _ = _grow_counts(TRIANGULAR, 3)
    assert counts[:3] == [1, 2, 7]
    counts0, _ = _grow_counts(zero_free(2), 3)
    assert counts0[:3] == [1, 2, 6]


def test_growth_matches_direct_filter_4x4():
    # independent route: filter every 4x4 pattern by canonicity + class budget
    direct = {
        C for C in _all_matrices(4, 2)
        if BIANGULAR.admits(C) and is_canonical(C, 2)
    }
    _, level4 = _grow_counts(BIANGULAR, 4)
    assert set(level4) == direct
    assert len(direct) == 25


def test_children_are_canonical_and_parents_survive_deletion():
    _, level4 = _grow_counts(BIANGULAR, 4)
    for child in level4:
        assert is_canonical(child, 2)
        parent = tuple(row[:-1] for row in child[:-1])
        assert is_canonical(parent, 2)


def test_equal_prefix_children_exist():
    # the all-alpha triangle requires prefix equality to be admitted
    parent = mat_from_vec((1,), 2)
    kids = list(augment_children(parent, BIANGULAR))
    assert mat_from_vec((1, 1, 1), 3) in kids


def test_symbols_and_zero_helpers():
    C = mat_from_vec((0, 1, -2), 3)
    assert symbols_used(C) == {1, 2}
    assert has_zero_entry(C)
    assert Alphabet(2).class_count(True, 2) == 3
    assert not BIANGULAR.admits(C)
    assert zero_free(2).admits(C)
