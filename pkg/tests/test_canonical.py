import random
from itertools import permutations
from math import factorial

import pytest

from regdigraph.canonical import (
    apply_permutation,
    automorphism_group,
    brute_automorphisms,
    brute_canonical_form,
    canonical_form,
    compose,
    cycle_type,
    inverse,
)
from regdigraph.core import Digraph

from conftest import random_two_regular

D = Digraph.from_rows


def test_apply_permutation_examples():
    g = D([[0, 2], [0, 0]])
    assert apply_permutation(g, (0, 1)) == g
    assert apply_permutation(g, (1, 0)) == D([[0, 0], [2, 0]])
    p = (2, 0, 1)
    h = D([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert apply_permutation(apply_permutation(h, p), inverse(p)) == h


def test_apply_permutation_size_mismatch():
    with pytest.raises(ValueError):
        apply_permutation(D([[2]]), (0, 1))


def test_canonical_form_examples():
    # the two relabelings flatten to 0020 and 0200; the first is smaller
    assert canonical_form(D([[0, 0], [2, 0]])) == D([[0, 0], [2, 0]])
    assert canonical_form(D([[0, 2], [0, 0]])) == D([[0, 0], [2, 0]])
    assert canonical_form(D([[2]])) == D([[2]])
    g = D([[0, 1, 1], [1, 1, 0], [1, 0, 1]])
    assert canonical_form(canonical_form(g)) == canonical_form(g)


def test_automorphism_examples():
    for n in range(1, 6):
        iso = D([[2 if i == j else 0 for j in range(n)] for i in range(n)])
        assert automorphism_group(iso).order == factorial(n)
    assert automorphism_group(D([[0, 2], [2, 0]])).elements == {(0, 1), (1, 0)}
    assert automorphism_group(D([[0, 1, 1], [1, 0, 1], [1, 1, 0]])).order == 6


def test_cycle_type():
    assert cycle_type((0, 1, 2)) == (3, 0, 0)
    assert cycle_type((1, 0, 2)) == (1, 1, 0)
    assert cycle_type((1, 2, 0)) == (0, 0, 1)


def test_matches_brute_force_on_random_graphs():
    rng = random.Random(7)
    for _ in range(200):
        g = random_two_regular(rng, rng.randint(1, 6))
        assert canonical_form(g) == brute_canonical_form(g)
        group = automorphism_group(g)
        assert set(group.elements) == brute_automorphisms(g)
        assert group.is_closed()
        assert factorial(g.n) % group.order == 0


def test_isomorphism_soundness_small(records_by_n):
    # distinct classes never share a canonical form, and every relabeling lands on its class
    for n in range(1, 5):
        forms = {r.graph for r in records_by_n[n]}
        for rec in records_by_n[n]:
            for p in permutations(range(n)):
                assert canonical_form(apply_permutation(rec.graph, p)) == rec.graph
        assert len(forms) == len(records_by_n[n])


def test_orbit_stabilizer(records_by_n):
    for n in range(1, 5):
        for rec in records_by_n[n]:
            orbit = {apply_permutation(rec.graph, p) for p in permutations(range(n))}
            assert len(orbit) == factorial(n) // rec.aut_order


def test_group_of_relabeled_graph_is_conjugate():
    rng = random.Random(11)
    for _ in range(50):
        g = random_two_regular(rng, 6)
        p = tuple(rng.sample(range(6), 6))
        h = apply_permutation(g, p)
        gh, gg = automorphism_group(h), automorphism_group(g)
        assert gh.order == gg.order == automorphism_group(canonical_form(g)).order
        assert {compose(compose(p, a), inverse(p)) for a in gg.elements} == gh.elements
