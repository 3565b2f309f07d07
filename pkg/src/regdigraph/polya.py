"""Cycle indices of node-permutation groups and what they count.

A cycle index is kept unreduced: one unit of coefficient per group element,
over the group order as denominator.  That keeps ``|A|`` recoverable, which
both the labeled-count identity ``n!/|A|`` and the Reg file format need.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

from .canonical import AutomorphismGroup, cycle_type


@dataclass(frozen=True)
class CycleIndex:
    n: int
    terms: tuple[tuple[tuple[int, ...], int], ...]
    denominator: int

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple[int, ...], int], denominator: int) -> "CycleIndex":
        for exps in terms:
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has wrong length for n={n}")
            if sum((i + 1) * e for i, e in enumerate(exps)) != n:
                raise ValueError(f"monomial {exps} is not a cycle type of {n} points")
        # descending lexicographic on (e_1, e_2, ...): t1^3 before t1t2 before t3
        ordered = tuple(sorted(((e, c) for e, c in terms.items() if c), reverse=True))
        return cls(n, ordered, denominator)

    @property
    def group_order(self) -> int:
        return self.denominator

    def coefficient_sum(self) -> int:
        return sum(c for _, c in self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __str__(self):
        from .formats import format_cycle_index

        return format_cycle_index(self)


def cycle_index_of(group: AutomorphismGroup) -> CycleIndex:
    counts = Counter(cycle_type(p) for p in group.elements)
    return CycleIndex.from_terms(group.n, counts, group.order)


def labeled_count(z: CycleIndex, n: int | None = None) -> int:
    """Number of distinct labelings of the graph whose group is summarised by ``z``."""
    n = z.n if n is None else n
    q, r = divmod(factorial(n), z.denominator)
    if r:
        raise ValueError(f"group order {z.denominator} does not divide {n}!")
    return q


@dataclass(frozen=True)
class RootedPolynomial:
    """Coefficient ``r`` counts the classes with ``r`` marked nodes."""

    coefficients: tuple[int, ...]

    def __add__(self, other: "RootedPolynomial") -> "RootedPolynomial":
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        a = a + (0,) * (size - len(a))
        b = b + (0,) * (size - len(b))
        return RootedPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __getitem__(self, r: int) -> int:
        return self.coefficients[r]

    def __len__(self):
        return len(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _one_plus_x_pow(i: int, e: int) -> list[int]:
    # (1 + x^i)^e
    out = [0] * (i * e + 1)
    for j in range(e + 1):
        out[i * j] = comb(e, j)
    return out


def rooted_polynomial(z: CycleIndex) -> RootedPolynomial:
    """Substitute ``t_i -> 1 + x^i`` and expand exactly."""
    total = [Fraction(0)] * (z.n + 1)
    for exps, coeff in z.terms:
        poly = [1]
        for i, e in enumerate(exps, start=1):
            if e:
                poly = _poly_mul(poly, _one_plus_x_pow(i, e))
        for d, c in enumerate(poly):
            total[d] += Fraction(coeff * c, z.denominator)
    if any(c.denominator != 1 for c in total):
        raise ValueError(f"non-integral rooted expansion {total}; cycle index is inconsistent")
    return RootedPolynomial(tuple(int(c) for c in total))


def rooted_table(records_by_n: Mapping[int, Iterable]) -> dict[int, list[int]]:
    """Row ``n`` sums the rooted polynomials of every class on ``n`` nodes."""
    table = {}
    for n in sorted(records_by_n):
        acc = RootedPolynomial((0,) * (n + 1))
        for rec in records_by_n[n]:
            acc = acc + rooted_polynomial(rec.cycle_index)
        table[n] = list(acc.coefficients)
    return table
