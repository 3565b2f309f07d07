"""Text formats: Reg files, cycle-index and tensor-term grammars, DOT and TSV.

A Reg file holds two lines per graph::

    [0,1][0,1][1,0][1,0]
    V2 0 (t1^2+t2)/2

The first line is the sorted arc list; the second gives ``V``, the number
of adjacency cells holding two or more arcs, the number of loops, and the
cycle index of the automorphism group.
"""
from __future__ import annotations

import re
from typing import Iterable

from .canonical import automorphism_group
from .core import Digraph, from_arc_list, to_arc_list
from .enumerate import GraphRecord
from .lovelock import TensorTerm
from .polya import CycleIndex


class RegFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


# cycle index


def format_cycle_index(z: CycleIndex) -> str:
    monomials = []
    for exps, coeff in z.terms:
        body = "".join(f"t{i}" + (f"^{e}" if e >= 2 else "") for i, e in enumerate(exps, start=1) if e)
        if not body:
            monomials.append(str(coeff))
        else:
            monomials.append(("" if coeff == 1 else str(coeff)) + body)
    return "(" + "+".join(monomials) + f")/{z.denominator}"


_CI_RE = re.compile(r"^\(([^()]*)\)/(\d+)$")
_MONO_RE = re.compile(r"^(\d*)((?:t\d+(?:\^\d+)?)*)$")
_VAR_RE = re.compile(r"t(\d+)(?:\^(\d+))?")


def parse_cycle_index(text: str, n: int | None = None) -> CycleIndex:
    m = _CI_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a cycle index: {text!r}")
    body, denom = m.group(1), int(m.group(2))
    parsed = []
    for mono in body.split("+"):
        mm = _MONO_RE.match(mono)
        if not mm or not mono:
            raise ValueError(f"bad monomial {mono!r} in {text!r}")
        coeff_text, vars_text = mm.groups()
        coeff = int(coeff_text) if coeff_text else 1
        exps = {}
        for var in _VAR_RE.finditer(vars_text):
            i = int(var.group(1))
            if i < 1 or i in exps:
                raise ValueError(f"bad variable in monomial {mono!r}")
            exps[i] = int(var.group(2) or 1)
        parsed.append((exps, coeff))
    if n is None:
        n = sum(i * e for i, e in parsed[0][0].items())
    terms = {}
    for exps, coeff in parsed:
        vec = tuple(exps.get(i, 0) for i in range(1, n + 1))
        if any(i > n for i in exps):
            raise ValueError(f"variable beyond t{n} in {text!r}")
        terms[vec] = terms.get(vec, 0) + coeff
    return CycleIndex.from_terms(n, terms, denom)


# Reg files


def format_arc_line(g: Digraph) -> str:
    return "".join(f"[{t},{h}]" for t, h in to_arc_list(g))


def format_v_line(rec: GraphRecord) -> str:
    return f"V{rec.multiarcs} {rec.loops} {format_cycle_index(rec.cycle_index)}"


def write_reg(records: Iterable[GraphRecord]) -> str:
    lines = []
    for rec in records:
        lines.append(format_arc_line(rec.graph))
        lines.append(format_v_line(rec))
    return "".join(line + "\n" for line in lines)


_PAIR_RE = re.compile(r"\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*")
_V_RE = re.compile(r"^V(\d+) (\d+) (\S+)$")


def _parse_arcs(line: str, lineno: int) -> list[tuple[int, int]]:
    arcs, pos = [], 0
    while pos < len(line):
        m = _PAIR_RE.match(line, pos)
        if not m:
            raise RegFormatError(lineno, f"malformed arc list near column {pos + 1}: {line[pos:pos + 12]!r}")
        arcs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    return arcs


def read_reg(text: str) -> list[GraphRecord]:
    """Parse a Reg file, recomputing every V-line field from its arc list.

    Graphs keep the labeling written in the file.  Any disagreement between
    the stated and recomputed multiarc count, loop count or cycle index
    raises :class:`RegFormatError`.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    records = []
    for i in range(0, len(lines), 2):
        arc_no, v_no = i + 1, i + 2
        arcs = _parse_arcs(lines[i], arc_no)
        if i + 1 >= len(lines):
            raise RegFormatError(arc_no, "arc list without a following V line")
        vm = _V_RE.match(lines[i + 1].strip())
        if not vm:
            raise RegFormatError(v_no, f"malformed V line: {lines[i + 1]!r}")
        try:
            stated = parse_cycle_index(vm.group(3))
        except ValueError as exc:
            raise RegFormatError(v_no, str(exc)) from None
        n = stated.n
        try:
            g = from_arc_list(arcs, n)
        except ValueError as exc:
            raise RegFormatError(arc_no, str(exc)) from None
        rec = GraphRecord.from_group(g, automorphism_group(g))
        for label, want, got in (
            ("multiarc count", int(vm.group(1)), rec.multiarcs),
            ("loop count", int(vm.group(2)), rec.loops),
            ("cycle index", format_cycle_index(stated), format_cycle_index(rec.cycle_index)),
        ):
            if want != got:
                raise RegFormatError(v_no, f"{label} is {want} but the graph gives {got}")
        records.append(rec)
    return records


def count_v_prefix(text: str, prefix: str) -> int:
    """Number of V lines starting with ``prefix`` (``"V0"``, ``"V0 0"``)."""
    return sum(1 for line in text.splitlines() if line.startswith("V") and line.startswith(prefix))


def count_loopless(text: str) -> int:
    """V lines whose loop field is 0; the semantic reading of the ``" 0"`` filter."""
    return sum(1 for line in text.splitlines() if line.startswith("V") and line.split(" ")[1] == "0")


# DOT


def export_dot(g: Digraph, name: str = "G") -> str:
    out = [f"digraph {name} {{"]
    out.extend(f"  {v};" for v in range(g.n))
    out.extend(f"  {t} -> {h};" for t, h in to_arc_list(g))
    out.append("}")
    return "\n".join(out) + "\n"


# TSV


def export_table(table, total: bool | None = None) -> str:
    """TSV with a header row, one row per ``n``, blank cells past the diagonal.

    ``table`` is either a :class:`~regdigraph.transforms.CountTable` (columns
    ``c = 1..max n`` plus a ``total`` column) or a mapping ``n -> [row]`` as
    produced by :func:`~regdigraph.polya.rooted_table` (columns ``r = 0..max n``).
    """
    from .transforms import CountTable

    if isinstance(table, CountTable):
        ns = table.rows()
        width = max(ns, default=0)
        header = ["n"] + [str(c) for c in range(1, width + 1)] + ["total"]
        body = []
        for n in ns:
            cells = [str(x) for x in table.row(n)]
            cells += [""] * (width - len(cells))
            body.append([str(n)] + cells + [str(table.total(n))])
    else:
        ns = sorted(table)
        width = max(ns, default=-1) + 1
        header = ["n"] + [str(r) for r in range(width)]
        body = []
        for n in ns:
            cells = [str(x) for x in table[n]]
            cells += [""] * (width - len(cells))
            if total:
                cells.append(str(sum(table[n])))
            body.append([str(n)] + cells)
        if total:
            header.append("total")
    return "".join("\t".join(row) + "\n" for row in [header] + body)


# tensor terms


def format_term(term: TensorTerm) -> str:
    return " ".join("R[" + "".join("^" + x for x in up) + "".join("_" + x for x in low) + "]" for up, low in term.factors)


_FACTOR_RE = re.compile(r"R\[((?:\^[a-z][0-9]*)*)((?:_[a-z][0-9]*)*)\]")


def parse_term(text: str) -> TensorTerm:
    factors = []
    for chunk in text.split():
        m = _FACTOR_RE.fullmatch(chunk)
        if not m:
            raise ValueError(f"bad tensor factor {chunk!r}")
        up = tuple(x for x in m.group(1).split("^") if x)
        low = tuple(x for x in m.group(2).split("_") if x)
        factors.append((up, low))
    return TensorTerm(tuple(factors))
