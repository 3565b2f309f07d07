
import pytest

from regdigraph.core import Digraph, loop_count
from regdigraph.formats import format_term, parse_term
from regdigraph.lovelock import (
    BipartiteGraph,
    from_bipartite,
    index_hygiene_ok,
    render_term,
    term_multiplicity,
    term_to_digraph,
    to_bipartite,
)

D = Digraph.from_rows


def test_to_bipartite_examples():
    assert to_bipartite(D([[0, 2], [2, 0]])).edges == ((0, 1), (0, 1), (1, 0), (1, 0))
    assert to_bipartite(D([[2]])).edges == ((0, 0), (0, 0))
    assert to_bipartite(D([[1, 1], [1, 1]])).edges == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_from_bipartite_examples():
    assert from_bipartite(BipartiteGraph(1, ((0, 0), (0, 0)))) == D([[2]])
    assert from_bipartite(BipartiteGraph(2, ((0, 1), (0, 1), (1, 0), (1, 0)))) == D([[0, 2], [2, 0]])


def test_degree_violations():
    with pytest.raises(ValueError):
        from_bipartite(BipartiteGraph(2, ((0, 0), (0, 0), (0, 1), (1, 1))))
    with pytest.raises(ValueError):
        to_bipartite(D([[1, 0], [1, 1]]))


def test_round_trip_all_classes(records_by_n):
    for n in range(0, 7):
        for rec in records_by_n[n]:
            b = to_bipartite(rec.graph)
            assert b.degrees() == ([2] * n, [2] * n)
            assert from_bipartite(b) == rec.graph


def test_render_single_node():
    term = render_term(D([[2]]))
    assert format_term(term) == "R[^a^b_a_b]"
    assert term.self_contractions() == 2


def test_render_doubled_two_cycle():
    # arcs (0,1),(0,1),(1,0),(1,0) get a,b,c,d: a,b lower on R0 and upper on R1
    assert format_term(render_term(D([[0, 2], [2, 0]]))) == "R[^c^d_a_b] R[^a^b_c_d]"


def test_term_properties(records_by_n):
    for n in range(1, 7):
        for rec in records_by_n[n]:
            term = render_term(rec.graph)
            assert index_hygiene_ok(term)
            assert len(set(term.letters())) == 2 * n
            assert term.self_contractions() == loop_count(rec.graph)
            text = format_term(term)
            assert text == format_term(render_term(rec.graph))
            assert term_to_digraph(parse_term(text)) == rec.graph


def test_multiplicity_counts_factor_orderings(records_by_n):
    from itertools import permutations

    from regdigraph.canonical import apply_permutation

    for rec in records_by_n[4]:
        # distinct labeled graphs reachable by reordering the factors
        orderings = {apply_permutation(rec.graph, p) for p in permutations(range(4))}
        assert term_multiplicity(rec.aut_order, 4) == len(orderings)
    assert [term_multiplicity(r.aut_order, 2) for r in records_by_n[2]] == [1, 1, 1]
    assert sum(term_multiplicity(r.aut_order, 3) for r in records_by_n[3]) == 21


def test_bipartite_image_is_everything():
    # every degree-2 bipartite multigraph on 3+3 nodes comes from a digraph
    from itertools import product

    for rows in product([(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)], repeat=3):
        if all(sum(col) == 2 for col in zip(*rows)):
            edges = tuple((b, t) for b, row in enumerate(rows) for t, m in enumerate(row) for _ in range(m))
            g = from_bipartite(BipartiteGraph(3, edges))
            assert to_bipartite(g).edges == tuple(sorted(edges))
