"""Levelwise enumeration of candidate classes with geometric pruning.

Classes of size n+1 are grown from the surviving classes of size n by
canonical augmentation, then filtered according to a schedule that keys off
the target dimension d:

    size <= d        nothing to prune (any pattern embeds)
    size d+1, d+2    strong test: every (d+1) x (d+1) submatrix determinant
                     (row and column sets independent) must vanish somewhere
                     admissible; certified by saturated Groebner bases
    size d+3 .. d+5  deletion test + weak test (principal minors only)
    above d+5        deletion test only

The deletion ("combinatorial") test requires every principal submatrix of
order n-1 to be equivalent to a surviving class of the previous level; the
copy obtained by deleting the last row is the parent and is skipped.  The
strong/weak boundaries are configurable because the published catalogues
were not all computed with the same cutover (the 4-angular run defers the
first Groebner sweep by one level to keep the level-5 set exact).

A Groebner budget exhaustion never discards a pattern: the pattern is kept
and the level records how many survivors are merely undecided.

With threads > 1, parents are expanded in a process pool; results come back
in submission order and every level is sorted by key sequence before use,
so counts, checkpoint bytes and downstream levels are identical for every
thread count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .formats import alphabet_tag, read_level, sorted_classes, write_level
from .gram import Alphabet, Matrix, augment_children, canonical_form
from .groebner import DEFAULT_BUDGET
from .keyeq import FAIL, UNDECIDED, solvability

MODE_NONE, MODE_STRONG, MODE_COMB_WEAK, MODE_COMB = "none", "strong", "comb+weak", "comb"


@dataclass(frozen=True)
class SearchConfig:
    alphabet: Alphabet
    dim: int | None = None
    max_n: int | None = None
    strong_from: int | None = None   # default dim+1
    strong_until: int | None = None  # default dim+2
    weak_until: int | None = None    # default dim+5
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    checkpoint_dir: str | None = None

    def mode_for(self, n: int) -> str:
        if self.dim is None:
            return MODE_NONE
        d = self.dim
        lo = self.strong_from if self.strong_from is not None else d + 1
        hi = self.strong_until if self.strong_until is not None else d + 2
        weak_hi = self.weak_until if self.weak_until is not None else d + 5
        if n < lo:
            return MODE_NONE
        if n <= hi:
            return MODE_STRONG
        if n <= weak_hi:
            return MODE_COMB_WEAK
        return MODE_COMB


@dataclass
class LevelReport:
    n: int
    classes: list[Matrix]
    undecided: int = 0
    from_checkpoint: bool = False
    seconds: float = 0.0

    @property
    def count(self) -> int:
        return len(self.classes)


def _principal_deletions(C: Matrix, skip_last: bool = True):
    n = len(C)
    for k in range(n - 1 if skip_last else n):
        yield tuple(tuple(row[j] for j in range(n) if j != k)
                    for i, row in enumerate(C) if i != k)


def _filter_child(child: Matrix, cfg: SearchConfig, mode: str,
                  prev_set: frozenset | None) -> tuple[bool, bool]:
    """(keep, undecided) for one canonical child."""
    m = cfg.alphabet.symbols
    if mode == MODE_NONE:
        return True, False
    if mode == MODE_STRONG:
        v = solvability(child, m, cfg.dim, principal_only=False, budget=cfg.budget)
        return v != FAIL, v == UNDECIDED
    # deletion test first: cheap relative to Groebner, prunes most
    for sub in _principal_deletions(child):
        if canonical_form(sub, m) not in prev_set:
            return False, False
    if mode == MODE_COMB_WEAK:
        v = solvability(child, m, cfg.dim, principal_only=True, budget=cfg.budget)
        return v != FAIL, v == UNDECIDED
    return True, False


def _expand_parent(parent: Matrix, cfg: SearchConfig, mode: str,
                   prev_set: frozenset | None) -> tuple[list[Matrix], int]:
    kept: list[Matrix] = []
    undecided = 0
    for child in augment_children(parent, cfg.alphabet):
        keep, und = _filter_child(child, cfg, mode, prev_set)
        if keep:
            kept.append(child)
            undecided += 1 if und else 0
    return kept, undecided


_POOL_STATE: dict = {}


def _pool_init(cfg: SearchConfig, mode: str, prev_set: frozenset | None):
    _POOL_STATE["args"] = (cfg, mode, prev_set)


def _pool_expand(parent: Matrix):
    cfg, mode, prev_set = _POOL_STATE["args"]
    return _expand_parent(parent, cfg, mode, prev_set)


def compute_level(prev: list[Matrix], n: int, cfg: SearchConfig) -> LevelReport:
    """Grow and filter level n (sizes start at 1) from the previous classes."""
    t0 = time.monotonic()
    mode = cfg.mode_for(n)
    prev_set = frozenset(prev) if mode in (MODE_COMB_WEAK, MODE_COMB) else None
    parents = prev if n > 1 else [()]
    classes: list[Matrix] = []
    undecided = 0
    if cfg.threads > 1 and len(parents) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads, initializer=_pool_init,
                                 initargs=(cfg, mode, prev_set)) as pool:
            chunk = max(1, len(parents) // (cfg.threads * 8))
            for kept, und in pool.map(_pool_expand, parents, chunksize=chunk):
                classes.extend(kept)
                undecided += und
    else:
        for parent in parents:
            kept, und = _expand_parent(parent, cfg, mode, prev_set)
            classes.extend(kept)
            undecided += und
    classes = sorted_classes(classes, cfg.alphabet.symbols)
    return LevelReport(n, classes, undecided, False, time.monotonic() - t0)


def run_search(cfg: SearchConfig, progress=None) -> list[LevelReport]:
    """Run levels 1, 2, ... until empty, max_n, or a missing growth source.

    With a checkpoint directory, finished levels are loaded back instead of
    recomputed and every computed level is written out (atomically) before
    the next one starts.
    """
    tag = alphabet_tag(cfg.alphabet)
    reports: list[LevelReport] = []
    prev: list[Matrix] = []
    n = 1
    while cfg.max_n is None or n <= cfg.max_n:
        report = None
        if cfg.checkpoint_dir:
            cached = read_level(cfg.checkpoint_dir, tag, cfg.dim, n)
            if cached is not None:
                report = LevelReport(n, cached, 0, True)
        if report is None:
            report = compute_level(prev, n, cfg)
            if cfg.checkpoint_dir:
                os.makedirs(cfg.checkpoint_dir, exist_ok=True)
                write_level(cfg.checkpoint_dir, cfg.dim, n, tag, report.classes,
                            cfg.alphabet.symbols)
        reports.append(report)
        if progress is not None:
            progress(report)
        if not report.classes:
            break
        prev = report.classes
        n += 1
    return reports


def series_counts(reports: list[LevelReport]) -> list[int]:
    return [r.count for r in reports]
