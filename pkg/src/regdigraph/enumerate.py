"""Isomorph-free generation of unlabeled k-regular digraphs.

Matrices are grown one row at a time.  A partial matrix of ``r + 1`` rows
survives only if no relabeling that keeps nodes ``0..r`` among themselves
(and the rest among themselves) produces smaller leading rows; the rows of
a canonical matrix all pass this test, so the search is complete.  The
completed matrix is kept iff it is its own canonical form, so each class is
emitted exactly once, already in canonical form.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial

from .canonical import AutomorphismGroup, canonical_form, lexmin_search
from .core import Digraph, loop_count, multiarc_count, weak_components
from .polya import CycleIndex, cycle_index_of


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationFilter:
    forbid_multiarcs: bool = False
    forbid_loops: bool = False
    connected_only: bool = False

    def accepts(self, g: Digraph) -> bool:
        if self.forbid_multiarcs and multiarc_count(g):
            return False
        if self.forbid_loops and loop_count(g):
            return False
        if self.connected_only and weak_components(g).count != 1:
            return False
        return True


NO_FILTER = EnumerationFilter()


@dataclass(frozen=True)
class GraphRecord:
    graph: Digraph
    aut_order: int
    cycle_index: CycleIndex
    components: int
    loops: int
    multiarcs: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def labeled_count(self) -> int:
        return factorial(self.n) // self.aut_order

    @classmethod
    def from_group(cls, g: Digraph, group: AutomorphismGroup) -> "GraphRecord":
        return cls(
            graph=g,
            aut_order=group.order,
            cycle_index=cycle_index_of(group),
            components=weak_components(g).count,
            loops=loop_count(g),
            multiarcs=multiarc_count(g),
        )


def make_record(g: Digraph) -> GraphRecord:
    """Record for an arbitrary labeled graph, stored in canonical form."""
    from .canonical import automorphism_group

    c = canonical_form(g)
    return GraphRecord.from_group(c, automorphism_group(c))


def _row_choices(n, k, r, colsum, ties, cap):
    """Rows for position ``r``: sum ``k``, column sums stay <= ``k``.

    ``ties`` lists runs of columns ``> r`` still equal over rows ``0..r-1``;
    inside a run the new entries must not decrease.
    """
    run_start = {}
    for run in ties:
        run = [c for c in run if c > r]
        for a, b in zip(run, run[1:]):
            run_start[b] = a
    out = []
    row = [0] * n

    def rec(j, left):
        if j == n:
            if left == 0:
                out.append(tuple(row))
            return
        hi = min(left, k - colsum[j], cap)
        lo = row[run_start[j]] if j in run_start else 0
        for x in range(lo, hi + 1):
            row[j] = x
            rec(j + 1, left - x)
        row[j] = 0

    rec(0, k)
    return out


def _next_ties(ties, row, r):
    new = []
    for run in ties:
        run = [c for c in run if c > r]
        start = 0
        for i in range(1, len(run) + 1):
            if i == len(run) or row[run[i]] != row[run[start]]:
                if i - start > 1:
                    new.append(run[start:i])
                start = i
    return new


class _Search:
    def __init__(self, n, k, filt, deadline=None):
        self.n, self.k, self.filt = n, k, filt
        self.deadline = deadline
        self.cap = 1 if filt.forbid_multiarcs else k
        self.ticks = 0

    def _check_time(self):
        self.ticks += 1
        if self.deadline is not None and self.ticks % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time budget exhausted while enumerating n={self.n}")

    def children(self, rows, colsum, ties):
        n, k, r = self.n, self.k, len(rows)
        for row in _row_choices(n, k, r, colsum, ties, self.cap):
            if self.filt.forbid_loops and row[r]:
                continue
            new_rows = rows + [row]
            if r + 1 < n and not self._partial_ok(new_rows):
                continue
            yield new_rows, [s + x for s, x in zip(colsum, row)], _next_ties(ties, row, r)

    def _partial_ok(self, rows):
        r1 = len(rows)
        cells = [list(range(r1)), list(range(r1, self.n))]
        return lexmin_search(rows, cells, r1, target=rows) is not None

    def walk(self, rows, colsum, ties, out):
        self._check_time()
        n = self.n
        if len(rows) == n:
            res = lexmin_search(rows, [list(range(n))], n, target=rows)
            if res is None:
                return
            g = Digraph(tuple(rows))
            if not self.filt.accepts(g):
                return
            _, leaves = res
            group = AutomorphismGroup(n, frozenset(leaves))
            out.append(GraphRecord.from_group(g, group))
            return
        for child in self.children(rows, colsum, ties):
            self.walk(*child, out)

    def roots(self, depth):
        """Surviving partial matrices of ``depth`` rows, in generation order."""
        level = [([], [0] * self.n, [list(range(self.n))])]
        for _ in range(min(depth, self.n)):
            level = [c for node in level for c in self.children(*node)]
        return level


def _walk_subtree(args):
    n, k, filt, deadline, node = args
    search = _Search(n, k, filt, deadline)
    out = []
    search.walk(*node, out)
    return out


def enumerate_unlabeled(n: int, k: int = 2, filter: EnumerationFilter = NO_FILTER,
                        time_budget: float | None = None, workers: int = 1) -> list[GraphRecord]:
    """One record per isomorphism class of k-regular digraphs on ``n`` nodes.

    Records come back sorted by the row-major flattening of their canonical
    matrices, identically for every ``workers`` value.
    """
    if k < 0 or n < 0:
        raise ValueError("n and k must be non-negative")
    if n == 0:
        g = Digraph(())
        return [GraphRecord.from_group(g, AutomorphismGroup(0, frozenset({()})))] if filter.accepts(g) else []
    deadline = time.monotonic() + time_budget if time_budget is not None else None
    search = _Search(n, k, filter, deadline)
    if workers <= 1:
        out = []
        search.walk([], [0] * n, [list(range(n))], out)
    else:
        roots = search.roots(2 if n > 2 else 0)
        jobs = [(n, k, filter, deadline, node) for node in roots]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            out = [rec for part in pool.map(_walk_subtree, jobs) for rec in part]
    out.sort(key=lambda rec: rec.graph.flat())
    return out


def default_workers() -> int:
    return os.cpu_count() or 1


def count_labeled(n: int, k: int = 2) -> int:
    """Count n x n non-negative integer matrices with all line sums ``k``.

    Row-by-row dynamic programme over the multiset of remaining column
    capacities; shares nothing with the unlabeled search.
    """

    @lru_cache(maxsize=None)
    def ways(caps: tuple[int, ...], rows_left: int) -> int:
        if rows_left == 0:
            return 1 if all(c == 0 for c in caps) else 0
        total = 0
        for row in _bounded_rows(caps, k):
            total += ways(tuple(sorted(c - x for c, x in zip(caps, row))), rows_left - 1)
        return total

    return ways((k,) * n, n)


def _bounded_rows(caps, k):
    def rec(j, left):
        if j == len(caps):
            if left == 0:
                yield ()
            return
        for x in range(min(left, caps[j]) + 1):
            for rest in rec(j + 1, left - x):
                yield (x,) + rest

    return rec(0, k)


def classify_by_components(records) -> dict[int, int]:
    """Map component count ``c`` to the number of records with ``c`` components."""
    row = {}
    for rec in records:
        row[rec.components] = row.get(rec.components, 0) + 1
    return dict(sorted(row.items()))


def brute_force_classes(n: int, k: int = 2) -> set[tuple[int, ...]]:
    """Canonical flattenings of every labeled k-regular matrix; small-n oracle."""
    from .canonical import brute_canonical_form

    rows = [r for r in product(range(k + 1), repeat=n) if sum(r) == k]
    found = set()

    def rec(acc, colsum):
        if len(acc) == n:
            if all(s == k for s in colsum):
                found.add(brute_canonical_form(Digraph(tuple(acc))).flat())
            return
        for r in rows:
            if all(s + x <= k for s, x in zip(colsum, r)):
                rec(acc + [r], [s + x for s, x in zip(colsum, r)])

    rec([], [0] * n)
    return found
