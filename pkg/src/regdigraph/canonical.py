"""Canonical form under simultaneous relabeling, and automorphism groups.

The canonical form of a digraph is the relabeling whose row-major adjacency
flattening is lexicographically smallest.  It is found one row at a time:
with rows ``0..i-1`` placed, any node of the leading cell may become row
``i``; the still-unplaced columns live in ordered cells, and the smallest
row ``i`` for that choice lists each cell's values in ascending order.  The
cells are then split by those values.  Only ties are branched on, and the
tied leaves at the bottom are exactly one coset of the automorphism group.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .core import Digraph

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p`` after ``q``: ``i -> p[q[i]]``."""
    return tuple(p[x] for x in q)


def is_permutation(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Exponent vector ``(e_1, ..., e_n)``: ``e_i`` cycles of length ``i``."""
    n = len(p)
    counts = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        counts[length - 1] += 1
    return tuple(counts)


def apply_permutation(g: Digraph, p: Sequence[int]) -> Digraph:
    """Relabel node ``r`` as ``p[r]``: ``result[p[r]][p[c]] == g[r][c]``."""
    n = g.n
    if not is_permutation(p, n):
        raise ValueError(f"not a permutation of 0..{n - 1}: {tuple(p)}")
    q = inverse(p)
    return Digraph.from_rows([[g.adj[q[i]][q[j]] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class AutomorphismGroup:
    n: int
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def is_closed(self) -> bool:
        if identity(self.n) not in self.elements:
            return False
        return all(compose(a, b) in self.elements for a in self.elements for b in self.elements) and all(
            inverse(a) in self.elements for a in self.elements
        )


def _split(cell, row_of_v):
    if len(cell) == 1:
        return [cell], [row_of_v[cell[0]]]
    buckets = {}
    for w in cell:
        buckets.setdefault(row_of_v[w], []).append(w)
    parts, vals = [], []
    for val in sorted(buckets):
        members = buckets[val]
        parts.append(members)
        vals.extend([val] * len(members))
    return parts, vals


class _Beaten(Exception):
    pass


def lexmin_search(adj, cells, depth, target=None):
    """Search for the smallest ``depth`` rows reachable by relabeling.

    ``cells`` is an ordered partition of the nodes; nodes may only move
    within their own cell's block of positions.  With ``target`` given the
    search stops (returning ``None``) as soon as a relabeling is found whose
    leading rows are strictly smaller than ``target``; otherwise returns
    ``(best_rows, leaves)`` where each leaf maps new position -> old node
    for the first ``depth`` positions.
    """
    best = list(target) if target is not None else [None] * depth
    leaves = []

    def rec(i, q, cells):
        if i == depth:
            leaves.append(tuple(q))
            return
        first, rest = cells[0], cells[1:]
        options = []
        for idx, v in enumerate(first):
            av = adj[v]
            row = [av[u] for u in q]
            row.append(av[v])
            newcells = []
            remaining = first[:idx] + first[idx + 1:]
            for cell in ([remaining] if remaining else []) + rest:
                parts, vals = _split(cell, av)
                newcells.extend(parts)
                row.extend(vals)
            options.append((tuple(row), v, newcells))
        low = min(o[0] for o in options)
        b = best[i]
        if b is None or low < b:
            if target is not None:
                raise _Beaten
            best[i] = low
            for j in range(i + 1, depth):
                best[j] = None
            leaves.clear()
        elif low > b:
            return
        for row, v, newcells in options:
            if row == best[i]:
                q.append(v)
                rec(i + 1, q, newcells)
                q.pop()

    try:
        rec(0, [], [list(c) for c in cells if c])
    except _Beaten:
        return None
    return best, leaves


def canonical_labeling(g: Digraph):
    """Return ``(canonical_form, q, leaves)`` with ``canonical[i][j] == g[q[i]][q[j]]``."""
    n = g.n
    if n == 0:
        return g, (), [()]
    best, leaves = lexmin_search(g.adj, [list(range(n))], n)
    return Digraph(tuple(best)), leaves[0], leaves


def canonical_form(g: Digraph) -> Digraph:
    return canonical_labeling(g)[0]


def automorphism_group(g: Digraph) -> AutomorphismGroup:
    _, q0, leaves = canonical_labeling(g)
    q0inv = inverse(q0)
    return AutomorphismGroup(g.n, frozenset(compose(q, q0inv) for q in leaves))


def brute_canonical_form(g: Digraph) -> Digraph:
    """Minimum flattening over all ``n!`` relabelings; test oracle."""
    return min((apply_permutation(g, p) for p in permutations(range(g.n))), key=Digraph.flat, default=g)


def brute_automorphisms(g: Digraph) -> set:
    return {p for p in permutations(range(g.n)) if apply_permutation(g, p) == g}
