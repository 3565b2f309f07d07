# Every 2-regular digraph on n nodes is one fully contracted product of n
# Riemann tensors: an arc i -> j is an index lowered on factor i and raised
# on factor j.
#
#     python demos/03_lovelock_terms.py
from regdigraph import enumerate_unlabeled
from regdigraph.formats import format_term, parse_term
from regdigraph.lovelock import from_bipartite, render_term, term_multiplicity, term_to_digraph, to_bipartite

for n in (1, 2, 3):
    print(f"--- products of {n} Riemann tensors")
    for rec in enumerate_unlabeled(n):
        term = render_term(rec.graph)
        # multiplicity: how many orderings of the factors give this graph
        print(f"{format_term(term):48s} x{term_multiplicity(rec.aut_order, n)}   loops={rec.loops}")

# The bottom/top bipartite picture and the term text both invert exactly.
for rec in enumerate_unlabeled(4):
    assert from_bipartite(to_bipartite(rec.graph)) == rec.graph
    assert term_to_digraph(parse_term(format_term(render_term(rec.graph)))) == rec.graph
print("round trips ok on all 25 classes with 4 factors")
