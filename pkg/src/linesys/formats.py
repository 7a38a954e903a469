"""Text formats: candidate matrices, integer vector sets, level checkpoints.

Matrix files:  a header line "n m" (size, symbol count), then n rows of
whitespace-separated codes with the diagonal written as "D" (the legacy
numeric stand-in 9999 is accepted on input).

Vector files:  a header "VECTORS n d scale S", then n rows of d integers;
the geometric vectors are the rows divided by sqrt(S).

Level checkpoint files:  a header "LEVEL <dim> <n> <alphabet> <count>"
(dim is "-" when the run is purely combinatorial), then one line per class:
the lower-triangle codes comma-joined ("-" for the empty 1x1 triangle),
rows sorted by key sequence.  The
sort makes checkpoint bytes independent of generation order, so runs with
different thread counts write identical files.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from .gram import Alphabet, Matrix, key_table, mat_from_vec, vec_of, zero_free

DIAG_TOKENS = {"D", "9999"}


# -- alphabets ---------------------------------------------------------------

_PRESETS = {
    "biangular": Alphabet(2),
    "triangular": Alphabet(3),
    "fourangular": Alphabet(4),
}


def alphabet_from_tag(tag: str) -> Alphabet:
    tag = tag.strip().lower()
    if tag in _PRESETS:
        return _PRESETS[tag]
    if tag.startswith("custom:"):
        body = tag[len("custom:"):]
        parts = [p.strip() for p in body.split(",") if p.strip()]
        if not parts:
            raise ValueError(f"bad alphabet tag {tag!r}")
        m = int(parts[0])
        if m < 1:
            raise ValueError("alphabet needs at least one symbol")
        flags = parts[1:]
        for f in flags:
            if f != "allow-zero":
                raise ValueError(f"unknown alphabet flag {f!r}")
        return zero_free(m) if "allow-zero" in flags else Alphabet(m)
    raise ValueError(f"unknown alphabet tag {tag!r}")


def alphabet_tag(alphabet: Alphabet) -> str:
    for name, preset in _PRESETS.items():
        if preset == alphabet:
            return name
    if not alphabet.count_zero_as_class and alphabet.max_classes == alphabet.symbols:
        return f"custom:{alphabet.symbols},allow-zero"
    return f"custom:{alphabet.symbols}"


# -- matrices ----------------------------------------------------------------


def format_matrix(C: Matrix, m: int) -> str:
    n = len(C)
    width = max(2, max((len(str(c)) for row in C for c in row), default=1))
    lines = [f"{n} {m}"]
    for i in range(n):
        cells = ["D" if i == j else str(C[i][j]) for j in range(n)]
        lines.append(" ".join(c.rjust(width) for c in cells))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> tuple[Matrix, int]:
    lines = [ln for ln in (l.strip() for l in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad matrix header {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:]):
        toks = ln.split()
        if len(toks) != n:
            raise ValueError(f"row {i} has {len(toks)} entries, expected {n}")
        row = []
        for j, tok in enumerate(toks):
            if tok in DIAG_TOKENS:
                if i != j:
                    raise ValueError(f"diagonal token off the diagonal at ({i},{j})")
                row.append(0)
            else:
                c = int(tok)
                if abs(c) > m:
                    raise ValueError(f"code {c} outside alphabet of {m} symbols")
                if i == j:
                    raise ValueError(f"numeric diagonal at ({i},{i}); write D")
                row.append(c)
        rows.append(tuple(row))
    C = tuple(rows)
    for i in range(n):
        for j in range(n):
            if i != j and C[i][j] != C[j][i]:
                raise ValueError(f"asymmetric entries at ({i},{j})")
    return C, m


def read_matrix(path: str) -> tuple[Matrix, int]:
    with open(path, "r", encoding="ascii") as f:
        return parse_matrix(f.read())


def write_matrix(path: str, C: Matrix, m: int) -> None:
    with open(path, "w", encoding="ascii") as f:
        f.write(format_matrix(C, m))


# -- integer vector sets -------------------------------------------------------


def format_vectors(rows: Sequence[Sequence[int]], scale: int) -> str:
    n = len(rows)
    d = len(rows[0]) if n else 0
    out = [f"VECTORS {n} {d} scale {scale}"]
    for r in rows:
        out.append(" ".join(str(int(x)) for x in r))
    return "\n".join(out) + "\n"


def parse_vectors(text: str) -> tuple[list[tuple[int, ...]], int]:
    lines = [ln for ln in (l.strip() for l in text.splitlines())
             if ln and not ln.startswith("#")]
    head = lines[0].split()
    if len(head) != 5 or head[0] != "VECTORS" or head[3] != "scale":
        raise ValueError(f"bad vector header {lines[0]!r}")
    n, d, scale = int(head[1]), int(head[2]), int(head[4])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} vectors, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        r = tuple(int(t) for t in ln.split())
        if len(r) != d:
            raise ValueError("vector of wrong length")
        rows.append(r)
    return rows, scale


# -- level checkpoints ---------------------------------------------------------


def _sort_key(m: int):
    key = key_table(m)
    return lambda C: tuple(key[c] for c in vec_of(C))


def sorted_classes(classes: Iterable[Matrix], m: int) -> list[Matrix]:
    return sorted(classes, key=_sort_key(m))


def format_level(dim: int | None, n: int, tag: str, classes: Sequence[Matrix],
                 m: int) -> str:
    body = sorted_classes(classes, m)
    head = f"LEVEL {'-' if dim is None else dim} {n} {tag} {len(body)}"
    lines = [head]
    for C in body:
        v = vec_of(C)
        lines.append(",".join(str(c) for c in v) if v else "-")
    return "\n".join(lines) + "\n"


def parse_level(text: str) -> tuple[int | None, int, str, list[Matrix]]:
    lines = text.splitlines()
    head = lines[0].split()
    if len(head) != 5 or head[0] != "LEVEL":
        raise ValueError(f"bad level header {lines[0]!r}")
    dim = None if head[1] == "-" else int(head[1])
    n, tag, count = int(head[2]), head[3], int(head[4])
    classes = []
    for ln in lines[1:]:
        ln = ln.strip()
        if not ln:
            continue
        v = () if ln == "-" else tuple(int(t) for t in ln.split(","))
        classes.append(mat_from_vec(v, n))
    if len(classes) != count:
        raise ValueError(f"checkpoint count {count} != {len(classes)} rows")
    return dim, n, tag, classes


def checkpoint_name(tag: str, dim: int | None, n: int) -> str:
    safe = tag.replace(":", "-").replace(",", "-")
    return f"{safe}_d{'x' if dim is None else dim}_n{n:02d}.txt"


def write_level(directory: str, dim: int | None, n: int, tag: str,
                classes: Sequence[Matrix], m: int) -> str:
    path = os.path.join(directory, checkpoint_name(tag, dim, n))
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as f:
        f.write(format_level(dim, n, tag, classes, m))
    os.replace(tmp, path)
    return path


def read_level(directory: str, tag: str, dim: int | None, n: int):
    path = os.path.join(directory, checkpoint_name(tag, dim, n))
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="ascii") as f:
        got_dim, got_n, got_tag, classes = parse_level(f.read())
    if (got_dim, got_n, got_tag) != (dim, n, tag):
        raise ValueError(f"checkpoint {path} header mismatch")
    return classes
