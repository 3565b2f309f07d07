"""Digraph representation and structural classifiers.

A digraph on ``n`` nodes labeled ``0..n-1`` is stored as its adjacency
matrix of arc multiplicities: ``adj[r][c]`` arcs run from ``r`` to ``c``.
Loops sit on the diagonal and count once toward both in- and outdegree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = tuple(tuple(int(x) for x in row) for row in self.adj)
        n = len(adj)
        for row in adj:
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            if any(x < 0 for x in row):
                raise ValueError("arc multiplicities must be non-negative")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "Digraph":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.adj)

    def flat(self) -> tuple[int, ...]:
        """Row-major flattening; the sort key for canonical ordering."""
        return tuple(x for row in self.adj for x in row)

    def out_degrees(self) -> list[int]:
        return [sum(row) for row in self.adj]

    def in_degrees(self) -> list[int]:
        return [sum(col) for col in zip(*self.adj)] if self.adj else []

    def __repr__(self):
        return f"Digraph({[list(r) for r in self.adj]})"


@dataclass(frozen=True)
class ComponentPartition:
    count: int
    assignment: tuple[int, ...]

    def members(self, cid: int) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c == cid]


def from_arc_list(arcs: Iterable[Arc], n: int) -> Digraph:
    adj = [[0] * n for _ in range(n)]
    for tail, head in arcs:
        if not (0 <= tail < n and 0 <= head < n):
            raise ValueError(f"arc ({tail},{head}) out of range for n={n}")
        adj[tail][head] += 1
    return Digraph.from_rows(adj)


def to_arc_list(g: Digraph) -> list[Arc]:
    return [(r, c) for r, row in enumerate(g.adj) for c, m in enumerate(row) for _ in range(m)]


def is_k_regular(g: Digraph, k: int) -> bool:
    return all(d == k for d in g.out_degrees()) and all(d == k for d in g.in_degrees())


def loop_count(g: Digraph) -> int:
    return sum(g.adj[i][i] for i in range(g.n))


def multiarc_count(g: Digraph) -> int:
    # cells, not surplus arcs: a double loop is one multiarc
    return sum(1 for row in g.adj for x in row if x >= 2)


def weak_components(g: Digraph) -> ComponentPartition:
    n = g.n
    assignment = [-1] * n
    count = 0
    for start in range(n):
        if assignment[start] >= 0:
            continue
        assignment[start] = count
        stack = [start]
        while stack:
            v = stack.pop()
            for w in range(n):
                if w != v and assignment[w] < 0 and (g.adj[v][w] or g.adj[w][v]):
                    assignment[w] = count
                    stack.append(w)
        count += 1
    return ComponentPartition(count, tuple(assignment))
