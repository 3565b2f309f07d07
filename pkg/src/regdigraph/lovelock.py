"""2-regular digraphs as fully contracted products of Riemann tensors.

Each node is one factor ``R``.  An arc ``i -> j`` is an index that sits in a
lower (covariant) slot of factor ``i`` and an upper (contravariant) slot of
factor ``j``; a loop is a contraction of a factor with itself.  The
intermediate bipartite picture puts the factors' lower slots on a bottom row
and their upper slots on a top row, with one edge per contracted index.
"""
from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass
from math import factorial

from .core import Digraph, from_arc_list, is_k_regular, to_arc_list


@dataclass(frozen=True)
class BipartiteGraph:
    n: int
    edges: tuple[tuple[int, int], ...]  # (bottom, top), sorted, repeated for multi-edges

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(e) for e in self.edges)))

    def degrees(self) -> tuple[list[int], list[int]]:
        bottom, top = [0] * self.n, [0] * self.n
        for b, t in self.edges:
            bottom[b] += 1
            top[t] += 1
        return bottom, top


@dataclass(frozen=True)
class TensorTerm:
    """``factors[i] = (upper letters, lower letters)`` of the ``i``-th ``R``."""

    factors: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]

    def letters(self) -> list[str]:
        return [x for up, low in self.factors for x in up + low]

    def self_contractions(self) -> int:
        return sum(len(set(up) & set(low)) for up, low in self.factors)

    def __str__(self):
        from .formats import format_term

        return format_term(self)


def _require_2_regular(g: Digraph):
    if not is_k_regular(g, 2):
        raise ValueError("Lovelock correspondence needs a 2-regular digraph")


def to_bipartite(g: Digraph) -> BipartiteGraph:
    _require_2_regular(g)
    return BipartiteGraph(g.n, tuple(to_arc_list(g)))


def from_bipartite(b: BipartiteGraph) -> Digraph:
    bottom, top = b.degrees()
    if any(d != 2 for d in bottom) or any(d != 2 for d in top):
        raise ValueError(f"bipartite graph is not degree 2 on both rows: bottom={bottom} top={top}")
    return from_arc_list(b.edges, b.n)


def index_letters(count: int) -> list[str]:
    alphabet = string.ascii_lowercase
    return [alphabet[i % 26] + (str(i // 26) if i >= 26 else "") for i in range(count)]


def render_term(g: Digraph) -> TensorTerm:
    """One fresh letter per arc, in sorted arc-list order.

    Lower slots of a factor fill in out-arc order, upper slots in in-arc
    order.
    """
    _require_2_regular(g)
    arcs = to_arc_list(g)
    uppers = [[] for _ in range(g.n)]
    lowers = [[] for _ in range(g.n)]
    for letter, (tail, head) in zip(index_letters(len(arcs)), arcs):
        lowers[tail].append(letter)
        uppers[head].append(letter)
    return TensorTerm(tuple((tuple(u), tuple(l)) for u, l in zip(uppers, lowers)))


def term_to_digraph(term: TensorTerm) -> Digraph:
    """Inverse of :func:`render_term`: each letter links its lower factor to its upper factor."""
    tail, head = {}, {}
    for i, (up, low) in enumerate(term.factors):
        for x in low:
            if x in tail:
                raise ValueError(f"index {x!r} appears in two lower slots")
            tail[x] = i
        for x in up:
            if x in head:
                raise ValueError(f"index {x!r} appears in two upper slots")
            head[x] = i
    if set(tail) != set(head):
        raise ValueError(f"free indices: {sorted(set(tail) ^ set(head))}")
    return from_arc_list(((tail[x], head[x]) for x in tail), len(term.factors))


def term_multiplicity(aut_order: int, n: int) -> int:
    """Distinct factor orderings of the product that give the same graph class."""
    return factorial(n) // aut_order


def index_hygiene_ok(term: TensorTerm) -> bool:
    ups = Counter(x for up, _ in term.factors for x in up)
    lows = Counter(x for _, low in term.factors for x in low)
    n = len(term.factors)
    return (
        all(len(up) == 2 and len(low) == 2 for up, low in term.factors)
        and set(ups) == set(lows)
        and all(v == 1 for v in ups.values())
        and all(v == 1 for v in lows.values())
        and len(ups) == 2 * n
    )
