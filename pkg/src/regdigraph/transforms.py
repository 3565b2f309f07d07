"""Sequence transforms linking connected counts to counts by component number.

Unlabeled: the multiset transform over partitions of ``n`` into ``c`` parts.
Labeled: the Bell transform over compositions, and separately the
coefficients of ``exp(t * A(x))`` for the connected EGF ``A``.  The k=1
reference sequences (partitions, Stirling numbers, Bell numbers) are
recomputed here from their own recurrences.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping, Sequence


@dataclass
class CountTable:
    kind: str  # "labeled" | "unlabeled"
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        n, c = key
        if c > n:
            return 0
        return self.entries.get(key, 0)

    def __setitem__(self, key: tuple[int, int], value: int):
        self.entries[key] = value

    def rows(self) -> list[int]:
        return sorted({n for n, _ in self.entries})

    def row(self, n: int) -> list[int]:
        """Entries ``c = 1..n``."""
        return [self[n, c] for c in range(1, n + 1)]

    def total(self, n: int) -> int:
        if n == 0:
            return 1
        return sum(self.row(n))

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        return all(self.entries.get(k, 0) == other.entries.get(k, 0) for k in keys)


class TransformMismatch(AssertionError):
    pass


def partitions(n: int, parts: int | None = None, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, optionally with exactly ``parts`` parts."""
    largest = n if largest is None else largest
    if n == 0:
        if parts in (None, 0):
            yield ()
        return
    if parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        rest = None if parts is None else parts - 1
        for tail in partitions(n - first, rest, first):
            yield (first,) + tail


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into ``parts`` positive parts, lexicographic."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - parts + 2):
        for tail in compositions(n - first, parts - 1):
            yield (first,) + tail


def _need(connected: Sequence[int], n: int):
    if len(connected) < n:
        raise ValueError(f"connected counts cover sizes 1..{len(connected)}, need 1..{n}")


def multiset_transform(connected: Sequence[int], n: int, c: int) -> int:
    """Unlabeled graphs on ``n`` nodes with ``c`` components.

    ``connected[i-1]`` is the number of connected classes on ``i`` nodes.  Each
    partition of ``n`` into ``c`` parts using part ``i`` with multiplicity
    ``m_i`` contributes the product of multiset coefficients
    ``C(connected_i + m_i - 1, m_i)``.
    """
    if n == 0:
        return 1 if c == 0 else 0
    _need(connected, n)
    total = 0
    for part in partitions(n, c):
        term = 1
        for i in set(part):
            m = part.count(i)
            term *= comb(connected[i - 1] + m - 1, m)
        total += term
    return total


def multinomial(n: int, parts: Sequence[int]) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def bell_transform(connected: Sequence[int], n: int, c: int) -> int:
    """Labeled graphs on ``n`` nodes with ``c`` components, from connected labeled counts."""
    if n == 0:
        return 1 if c == 0 else 0
    _need(connected, n)
    total = 0
    for comp in compositions(n, c):
        term = multinomial(n, comp)
        for part in comp:
            term *= connected[part - 1]
        total += term
    q, r = divmod(total, factorial(c))
    if r:
        raise ValueError(f"composition sum {total} not divisible by {c}!; bad connected counts")
    return q


def bell_table(connected: Sequence[int], upto: int) -> CountTable:
    table = CountTable("labeled")
    for n in range(1, upto + 1):
        for c in range(1, n + 1):
            table[n, c] = bell_transform(connected, n, c)
    return table


def egf_table(connected: Sequence[int], upto: int) -> CountTable:
    """``L(n, c)`` read off ``exp(t * A(x))`` with ``A(x) = sum connected_n x^n / n!``.

    Uses the exponential recurrence ``m F_m = sum_j j G_j F_{m-j}`` on power
    series in ``x`` whose coefficients are polynomials in ``t``.
    """
    _need(connected, upto)
    g = [Fraction(0)] + [Fraction(connected[i - 1], factorial(i)) for i in range(1, upto + 1)]
    # f[m] is a list of Fraction coefficients in t
    f = [[Fraction(1)]]
    for m in range(1, upto + 1):
        acc = [Fraction(0)] * (m + 1)
        for j in range(1, m + 1):
            if not g[j]:
                continue
            # G_j carries one factor of t
            for c, coeff in enumerate(f[m - j]):
                acc[c + 1] += j * g[j] * coeff
        f.append([a / m for a in acc])
    table = CountTable("labeled")
    for n in range(1, upto + 1):
        for c in range(1, n + 1):
            val = f[n][c] * factorial(n)
            if val.denominator != 1:
                raise ValueError(f"non-integral EGF coefficient at ({n},{c})")
            table[n, c] = int(val)
    return table


def verify_egf(connected: Sequence[int], upto: int) -> CountTable:
    """EGF route to the labeled table, cross-checked entry by entry against the Bell transform."""
    via_egf = egf_table(connected, upto)
    via_bell = bell_table(connected, upto)
    for key in sorted(via_egf.entries):
        if via_egf[key] != via_bell[key]:
            raise TransformMismatch(f"EGF and Bell transform disagree at (n,c)={key}: {via_egf[key]} != {via_bell[key]}")
    return via_egf


def assemble_unlabeled_table(records_by_n: Mapping[int, Sequence]) -> CountTable:
    """Table of ``U(n, c)`` from enumerated records, checked against the multiset transform."""
    from .enumerate import classify_by_components

    table = CountTable("unlabeled")
    ns = sorted(n for n in records_by_n if n > 0)
    connected = []
    for n in ns:
        if n != len(connected) + 1:
            raise ValueError(f"records must cover 1..max consecutively; missing n={len(connected) + 1}")
        direct = classify_by_components(records_by_n[n])
        connected.append(direct.get(1, 0))
        for c in range(1, n + 1):
            expected = multiset_transform(connected, n, c)
            if direct.get(c, 0) != expected:
                raise TransformMismatch(
                    f"direct count {direct.get(c, 0)} != multiset transform {expected} at (n,c)=({n},{c})"
                )
            table[n, c] = expected
    return table


# k = 1 reference sequences


def partition_numbers(upto: int) -> list[int]:
    """p(0..upto) from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * upto
    for n in range(1, upto + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return p


def partitions_into_parts(n: int, c: int) -> int:
    """Partitions of ``n`` into exactly ``c`` parts: ``p(n,c) = p(n-1,c-1) + p(n-c,c)``."""
    table = [[0] * (c + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for j in range(1, min(m, c) + 1):
            table[m][j] = table[m - 1][j - 1] + table[m - j][j]
    return table[n][c]


def stirling2(n: int, c: int) -> int:
    row = [1]  # S(0, 0)
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for j in range(1, m + 1):
            new[j] = j * (row[j] if j < len(row) else 0) + row[j - 1]
        row = new
    return row[c] if c < len(row) else 0


def bell_numbers(upto: int) -> list[int]:
    return [sum(stirling2(n, c) for c in range(n + 1)) for n in range(upto + 1)]
