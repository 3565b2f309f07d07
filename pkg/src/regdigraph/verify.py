"""Cross-validation of enumerated data against the published tables."""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from math import factorial

from . import reference as ref
from .core import from_arc_list, to_arc_list
from .enumerate import NO_FILTER, classify_by_components, count_labeled, enumerate_unlabeled
from .formats import (
    RegFormatError,
    count_loopless,
    count_v_prefix,
    format_cycle_index,
    format_term,
    parse_term,
    read_reg,
    write_reg,
)
from .lovelock import from_bipartite, render_term, term_to_digraph, to_bipartite
from .polya import rooted_table
from .transforms import (
    TransformMismatch,
    assemble_unlabeled_table,
    bell_numbers,
    bell_table,
    partition_numbers,
    partitions_into_parts,
    stirling2,
    verify_egf,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def first_divergence(label, got, want):
    """``None`` if equal, else a message naming the first differing index."""
    for i in range(max(len(got), len(want))):
        g = got[i] if i < len(got) else None
        w = want[i] if i < len(want) else None
        if g != w:
            return f"{label}[{i}] = {g}, expected {w}"
    return None


def load_or_enumerate(n, cache_dir=None, time_budget=None, workers=1):
    """Records for ``n`` nodes, read from ``<cache_dir>/Reg<n>.txt`` when present."""
    path = os.path.join(cache_dir, f"Reg{n}.txt") if cache_dir else None
    if path and os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            return read_reg(fh.read())
    records = enumerate_unlabeled(n, 2, NO_FILTER, time_budget=time_budget, workers=workers)
    if path:
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(write_reg(records))
    return records


def run_checks(max_n=7, cache_dir=None, time_budget=None, workers=1):
    checks = []

    def check(name, detail):
        checks.append(Check(name, detail is None, detail or ""))

    by_n = {}
    for n in range(1, max_n + 1):
        try:
            by_n[n] = load_or_enumerate(n, cache_dir, time_budget, workers)
        except RegFormatError as exc:
            check(f"load Reg{n}.txt", str(exc))
            return checks
    texts = {n: write_reg(recs) for n, recs in by_n.items()}

    # unlabeled table, direct and through the multiset transform
    for n, recs in by_n.items():
        if n in ref.UNLABELED:
            row = classify_by_components(recs)
            got = [row.get(c, 0) for c in range(1, n + 1)]
            check(f"Table II row {n}", first_divergence(f"U({n},c) for c=1..", got, ref.UNLABELED[n]))
    try:
        assemble_unlabeled_table(by_n)
        check("multiset transform matches classification", None)
    except TransformMismatch as exc:
        check("multiset transform matches classification", str(exc))

    # labeled counts
    for n, recs in by_n.items():
        weighted = sum(factorial(n) // r.aut_order for r in recs)
        detail = None
        if n <= 5 and weighted != count_labeled(n, 2):
            detail = f"sum n!/|A| = {weighted}, labeled search gives {count_labeled(n, 2)}"
        elif n in ref.LABELED_TOTAL and weighted != ref.LABELED_TOTAL[n]:
            detail = f"sum n!/|A| = {weighted}, table gives {ref.LABELED_TOTAL[n]}"
        check(f"sum n!/|A| = {weighted} at n={n}", detail)

    connected = [sum(factorial(n) // r.aut_order for r in recs if r.components == 1) for n, recs in sorted(by_n.items())]
    upto = min(max_n, max(ref.LABELED))
    bell = bell_table(connected, max_n)
    for n in range(1, upto + 1):
        check(f"Table I row {n} (Bell transform)", first_divergence(f"L({n},c) for c=1..", bell.row(n), ref.LABELED[n]))
    try:
        egf = verify_egf(connected, max_n)
        for n in range(1, upto + 1):
            check(f"Table I row {n} (EGF)", first_divergence(f"L({n},c) for c=1..", egf.row(n), ref.LABELED[n]))
    except TransformMismatch as exc:
        check("EGF agrees with Bell transform", str(exc))
    for n, recs in by_n.items():
        per_c = Counter()
        for r in recs:
            per_c[r.components] += factorial(n) // r.aut_order
        got = [per_c[c] for c in range(1, n + 1)]
        check(f"Bell transform matches cycle indices at n={n}", first_divergence(f"L({n},c)", got, bell.row(n)))

    # rooted counts
    rooted = rooted_table(by_n)
    for n, row in rooted.items():
        detail = None if row == row[::-1] else f"row {n} is not palindromic: {row}"
        if detail is None and n in ref.ROOTED:
            printed = ref.ROOTED[n]
            detail = first_divergence(f"U^(r)({n}) for r=0..", row[: len(printed)], printed)
        check(f"Table III row {n}", detail)

    # filtered sequences, read off the Reg text
    for label, seq, count in (
        ("no multiarcs (V0)", ref.NO_MULTIARCS, lambda t: count_v_prefix(t, "V0")),
        ("simple loopless (V0 0)", ref.SIMPLE_LOOPLESS, lambda t: count_v_prefix(t, "V0 0")),
        ("loopless", ref.LOOPLESS, count_loopless),
    ):
        for n, want in seq.items():
            if n in texts:
                got = count(texts[n])
                check(f"filter {label} n={n}", None if got == want else f"{got} graphs, expected {want}")

    # n = 3 worked example
    if 3 in by_n:
        got = Counter(format_cycle_index(r.cycle_index) for r in by_n[3])
        check("n=3 cycle indices", None if dict(got) == ref.CYCLE_INDICES_N3 else f"got {dict(got)}")

    # 1-regular identities
    p = partition_numbers(max_n)
    for n in range(1, max_n + 1):
        recs = enumerate_unlabeled(n, 1)
        row = classify_by_components(recs)
        detail = None
        if row.get(1, 0) != 1:
            detail = f"U_1({n},1) = {row.get(1, 0)}"
        elif len(recs) != p[n]:
            detail = f"U_1({n}) = {len(recs)}, p({n}) = {p[n]}"
        else:
            for c in range(1, n + 1):
                if row.get(c, 0) != partitions_into_parts(n, c):
                    detail = f"U_1({n},{c}) = {row.get(c, 0)}, expected {partitions_into_parts(n, c)}"
                    break
        check(f"1-regular unlabeled n={n}", detail)
    l1 = bell_table([1] * max_n, max_n)
    detail = None
    for n in range(1, max_n + 1):
        for c in range(1, n + 1):
            if l1[n, c] != stirling2(n, c):
                detail = detail or f"L_1({n},{c}) = {l1[n, c]}, S2 = {stirling2(n, c)}"
        if detail is None and l1.total(n) != bell_numbers(n)[n]:
            detail = f"L_1({n}) = {l1.total(n)}, Bell = {bell_numbers(n)[n]}"
    check("1-regular labeled (Stirling, Bell)", detail)

    # round trips
    for n, recs in by_n.items():
        detail = None
        if write_reg(read_reg(texts[n])) != texts[n]:
            detail = "Reg write/read not byte-exact"
        for r in recs:
            g = r.graph
            if from_arc_list(to_arc_list(g), n) != g:
                detail = detail or f"arc list round trip fails for {g}"
            if from_bipartite(to_bipartite(g)) != g:
                detail = detail or f"bipartite round trip fails for {g}"
            if term_to_digraph(parse_term(format_term(render_term(g)))) != g:
                detail = detail or f"tensor term round trip fails for {g}"
        check(f"round trips n={n}", detail)
    return checks
