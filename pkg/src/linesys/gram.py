"""Candidate Gram matrices over a coded alphabet, canonical forms, growth.

A candidate matrix for a system of n lines is a symmetric n x n pattern whose
off-diagonal entries are integer codes: 0 for orthogonal pairs and +-k for
the k-th angle symbol (the code sign is the sign of the inner product once
unit representatives are fixed).  Matrices are stored as tuples of row
tuples with the (never inspected) diagonal set to 0.

Two patterns describe the same line system when one maps to the other by
simultaneously permuting rows/columns, flipping signs of individual lines
(which flips the signs of a row and matching column), and renaming the angle
symbols by any sign-respecting bijection.  The canonical representative of a
class is the one whose concatenated lower triangle

    vec(C) = (C[1][0], C[2][0], C[2][1], C[3][0], ...)

is smallest in the key order

    0 < +1 < -1 < +2 < -2 < ...

The canonical search is a backtracking scan over row placements and sign
choices; the symbol renaming never needs branching, because for a fixed
placement the entry-minimal renaming is forced: give each symbol, at its
first appearance in the image, the smallest name not yet used and a positive
sign.  A standard exchange argument shows the greedy renaming is
lexicographically optimal for its placement, so pruning against it is
complete.  Canonical matrices therefore present their symbols in increasing
first-use order with positive first occurrences.

Growth ("augmentation") appends one new last row to a canonical parent.  The
stitching facts that make levelwise enumeration exhaustive and duplicate-free
are: deleting the last row of a canonical matrix leaves a canonical matrix,
and the new row's leading n-1 entries must compare >= the parent's last row
(prefix rule; equality is possible and must be admitted).  Every canonical
n+1 pattern then arises from exactly one (parent, row) pair, so no global
deduplication is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Matrix = tuple  # tuple of row tuples of int codes


@dataclass(frozen=True)
class Alphabet:
    """Entry alphabet {0, +-1, ..., +-symbols} with an angle-class budget.

    `max_classes` caps how many distinct angle classes may appear in one
    matrix.  A zero entry counts as a class when `count_zero_as_class` is
    set (a right angle is an angle); the relaxed variants used for the
    orthogonality-heavy catalogues switch it off.
    """

    symbols: int
    count_zero_as_class: bool = True
    max_classes: int | None = None

    def __post_init__(self):
        if self.max_classes is None:
            object.__setattr__(self, "max_classes", self.symbols)

    def class_count(self, has_zero: bool, nsymbols: int) -> int:
        return nsymbols + (1 if has_zero and self.count_zero_as_class else 0)

    def admits(self, C: Matrix) -> bool:
        syms = symbols_used(C)
        if syms and max(syms) > self.symbols:
            return False
        return self.class_count(has_zero_entry(C), len(syms)) <= self.max_classes


BIANGULAR = Alphabet(2)
TRIANGULAR = Alphabet(3)
FOURANGULAR = Alphabet(4)


def zero_free(symbols: int) -> Alphabet:
    """Alphabet where orthogonality is free (zero never counts as a class)."""
    return Alphabet(symbols, count_zero_as_class=False)


def key_table(m: int) -> list[int]:
    """KEY[c] for codes c in -m..m using wrap-around indexing."""
    key = [0] * (2 * m + 1)
    for k in range(1, m + 1):
        key[k] = 2 * k - 1
        key[2 * m + 1 - k] = 2 * k  # position of code -k
    return key


def vec_of(C: Matrix) -> tuple:
    return tuple(C[i][j] for i in range(1, len(C)) for j in range(i))


def mat_from_vec(v: Sequence[int], n: int) -> Matrix:
    rows = [[0] * n for _ in range(n)]
    it = iter(v)
    for i in range(1, n):
        for j in range(i):
            rows[i][j] = rows[j][i] = next(it)
    return tuple(tuple(r) for r in rows)


def symbols_used(C: Matrix) -> set[int]:
    return {abs(c) for row in C for c in row if c}


def has_zero_entry(C: Matrix) -> bool:
    n = len(C)
    return any(C[i][j] == 0 for i in range(1, n) for j in range(i))


def transform(C: Matrix, perm: Sequence[int], signs: Sequence[int],
              relabel: dict[int, int] | None = None) -> Matrix:
    """Image of C under (perm, signs, relabel).

    Row i of the image is row perm[i] of C; signs flip individual lines;
    relabel maps each positive symbol to a signed symbol (odd map extended by
    relabel[-k] = -relabel[k], with 0 fixed).
    """
    n = len(C)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = C[perm[i]][perm[j]] * signs[i] * signs[j]
            if e and relabel:
                t = relabel[abs(e)]
                e = t if e > 0 else -t
            rows[i][j] = e
    return tuple(tuple(r) for r in rows)


def greedy_relabel_vec(v: Sequence[int], m: int) -> list[int]:
    """Rename symbols along v in first-use order, first occurrences positive."""
    tgt = [0] * (m + 1)
    sgn = [0] * (m + 1)
    nxt = 1
    out = []
    for e in v:
        if e == 0:
            out.append(0)
            continue
        a = e if e > 0 else -e
        if not tgt[a]:
            tgt[a] = nxt
            sgn[a] = 1 if e > 0 else -1
            nxt += 1
        out.append(tgt[a] if (e > 0) == (sgn[a] > 0) else -tgt[a])
    return out


def _smaller_image(C: Matrix, m: int, tkeys: Sequence[int],
                   allow_relabel: bool) -> list[int] | None:
    """First group image of C strictly below the target key sequence.

    Returns the complete image vec (as codes) or None.  The search walks row
    placements depth-first; the global sign flip is factored out by pinning
    the first placed row to +.  Entries are compared one at a time against
    `tkeys`; > prunes the candidate row, < wins (the image is then completed
    with the remaining rows in index order, which cannot affect strictness).
    """
    n = len(C)
    if n < 2:
        return None
    KEY = key_table(m)
    used = [False] * n
    perm = [0] * n
    sgn = [1] * n
    sym_tgt = [0] * (m + 1)
    sym_sgn = [0] * (m + 1)
    cur: list[int] = [0] * (n * (n - 1) // 2)
    state = [1]  # next symbol name

    def relabeled(e: int) -> int:
        if not allow_relabel:
            return e
        a = e if e > 0 else -e
        tt = sym_tgt[a]
        if tt:
            return tt if (e > 0) == (sym_sgn[a] > 0) else -tt
        sym_tgt[a] = state[0]
        sym_sgn[a] = 1 if e > 0 else -1
        state[0] += 1
        return sym_tgt[a]

    def complete_from(depth: int, vpos: int) -> None:
        """Fill rows depth..n-1 with the unused rows, signs +, greedy names."""
        rest = [i for i in range(n) if not used[i]]
        for d, i in enumerate(rest, start=depth):
            for t in range(d):
                e = C[i][perm[t]]
                if e:
                    e *= sgn[t]
                    e = relabeled(e)
                cur[vpos] = e
                vpos += 1
            perm[d] = i
            sgn[d] = 1

    def place(depth: int, vpos: int) -> bool:
        snap = state[0]
        for i in range(n):
            if used[i]:
                continue
            Ci = C[i]
            for s in ((1,) if depth == 0 else (1, -1)):
                undo_from = state[0]
                undo_syms: list[int] = []
                pruned = False
                for t in range(depth):
                    e = Ci[perm[t]]
                    if e:
                        e *= s * sgn[t]
                        if allow_relabel:
                            a = e if e > 0 else -e
                            if not sym_tgt[a]:
                                undo_syms.append(a)
                            e = relabeled(e)
                        k = KEY[e]
                    else:
                        k = 0
                    tk = tkeys[vpos + t]
                    if k > tk:
                        pruned = True
                        break
                    cur[vpos + t] = e
                    if k < tk:
                        # strict win: freeze this row prefix as placed, then
                        # fill the remainder of this row and all later rows
                        used[i] = True
                        perm[depth] = i
                        sgn[depth] = s
                        for t2 in range(t + 1, depth):
                            e2 = Ci[perm[t2]]
                            if e2:
                                e2 *= s * sgn[t2]
                                e2 = relabeled(e2)
                            cur[vpos + t2] = e2
                        complete_from(depth + 1, vpos + depth)
                        return True
                if not pruned and depth + 1 < n:
                    used[i] = True
                    perm[depth] = i
                    sgn[depth] = s
                    if place(depth + 1, vpos + depth):
                        return True
                    used[i] = False
                for a in undo_syms:
                    sym_tgt[a] = 0
                state[0] = undo_from
        state[0] = snap
        return False

    if place(0, 0):
        return cur[:]
    return None


def has_smaller_image(C: Matrix, m: int, allow_relabel: bool = True) -> bool:
    """True iff some group image of C has a strictly smaller vec."""
    KEY = key_table(m)
    tkeys = [KEY[c] for c in vec_of(C)]
    return _smaller_image(C, m, tkeys, allow_relabel) is not None


def is_canonical(C: Matrix, m: int) -> bool:
    return not has_smaller_image(C, m)


def canonical_form(C: Matrix, m: int, allow_relabel: bool = True) -> Matrix:
    """The canonical representative of C's equivalence class.

    Iterated descent: start from the greedily renamed identity image and
    repeatedly replace the target by any strictly smaller image until none
    exists.  Each step is lexicographically decreasing, so this terminates;
    the fixed point is the class minimum.
    """
    n = len(C)
    if n < 2:
        return C
    KEY = key_table(m)
    v = list(vec_of(C))
    if allow_relabel:
        v = greedy_relabel_vec(v, m)
    while True:
        tkeys = [KEY[c] for c in v]
        nxt = _smaller_image(C, m, tkeys, allow_relabel)
        if nxt is None:
            return mat_from_vec(v, n)
        v = nxt


def are_equivalent(A: Matrix, B: Matrix, m: int) -> bool:
    if len(A) != len(B):
        return False
    return canonical_form(A, m) == canonical_form(B, m)


# -- canonical growth --------------------------------------------------------


def augment_children(parent: Matrix, alphabet: Alphabet,
                     extra_row_filter=None) -> Iterator[Matrix]:
    """All canonical one-row extensions of a canonical parent.

    Candidate last rows are generated directly in key order under three
    structural constraints (each necessary for the child to be canonical, so
    nothing valid is skipped):

    * prefix rule: the first n-1 entries compare >= the parent's last row,
      key-lexicographically;
    * symbol introduction: a symbol above all used so far may only appear as
      +(next symbol), and the angle-class budget must hold;
    * zero rule: a zero-free canonical parent with n >= 2 starts with code
      +1, so a zero entry in the new row would canonise below it.

    Each surviving candidate goes through the full canonicity search.
    `extra_row_filter(row)` may veto rows early (used for cheap search-level
    prechecks); it sees the candidate row as a tuple.
    """
    n = len(parent)
    m = alphabet.symbols
    if n == 0:
        yield ((0,),)
        return
    KEY = key_table(m)

    parent_syms = symbols_used(parent)
    parent_has_zero = has_zero_entry(parent)
    zero_banned = n >= 2 and not parent_has_zero
    max_classes = alphabet.max_classes
    base_classes = alphabet.class_count(parent_has_zero, len(parent_syms))
    count_zero = alphabet.count_zero_as_class

    # prefix lower bound: keys of the parent's last row against rows 0..n-2
    bound = [KEY[parent[n - 1][t]] for t in range(n - 1)]

    # codes in key order: 0, +1, -1, +2, -2, ...
    codes_in_order = [0]
    for k in range(1, m + 1):
        codes_in_order.extend((k, -k))

    row = [0] * n
    out_rows: list[tuple] = []

    def extend(t: int, tied: bool, next_sym: int, classes: int, zero_used: bool):
        if t == n:
            out_rows.append(tuple(row))
            return
        in_prefix = t < n - 1
        for c in codes_in_order:
            a = c if c >= 0 else -c
            if a > next_sym:
                break  # larger symbols can only enter in order
            if a == next_sym:
                if c < 0 or a > m:
                    continue  # first occurrence must be +, and in range
                cls = classes + 1
            elif c == 0 and not zero_used and count_zero:
                cls = classes + 1
            else:
                cls = classes
            if cls > max_classes:
                continue
            if c == 0 and zero_banned:
                continue
            if tied and in_prefix:
                k, b = KEY[c], bound[t]
                if k < b:
                    continue
                still = k == b
            else:
                still = False
            row[t] = c
            extend(t + 1, still, next_sym + (1 if a == next_sym else 0),
                   cls, zero_used or c == 0)

    extend(0, n >= 2, len(parent_syms) + 1, base_classes, parent_has_zero)

    for r in out_rows:
        if extra_row_filter is not None and not extra_row_filter(r):
            continue
        child = tuple(parent[i] + (r[i],) for i in range(n)) + (r + (0,),)
        if not has_smaller_image(child, m):
            yield child


def random_image(C: Matrix, m: int, rng) -> Matrix:
    """A uniformly random group image of C (for invariance testing)."""
    n = len(C)
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    target = list(range(1, m + 1))
    rng.shuffle(target)
    relabel = {k: rng.choice((1, -1)) * target[k - 1] for k in range(1, m + 1)}
    return transform(C, perm, signs, relabel)
