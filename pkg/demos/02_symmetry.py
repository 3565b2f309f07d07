# Automorphism groups, cycle indices, and rooted counts.
#
#     python demos/02_symmetry.py
from collections import Counter

from regdigraph import Digraph, automorphism_group, canonical_form, enumerate_unlabeled
from regdigraph.formats import export_table
from regdigraph.polya import cycle_index_of, labeled_count, rooted_polynomial, rooted_table

# A digraph is its adjacency matrix of arc multiplicities.  Here: node 0
# has a double loop, nodes 1 and 2 send two arcs to each other.
g = Digraph.from_rows([[2, 0, 0], [0, 0, 2], [0, 2, 0]])
group = automorphism_group(g)
print("automorphisms:", sorted(group.elements))
print("cycle index:", cycle_index_of(group))

# The canonical form is the relabeling with the smallest row-major flattening.
print("canonical form:", canonical_form(g))

# On three nodes the eight classes carry four distinct cycle indices; the
# labeled counts n!/|Aut| add up to the 21 labeled graphs.
recs = enumerate_unlabeled(3)
print(Counter(str(r.cycle_index) for r in recs))
print("labeled total:", sum(labeled_count(r.cycle_index) for r in recs))

# Substituting t_i -> 1 + x^i counts the ways of marking r nodes up to symmetry.
for r in recs:
    print(r.cycle_index, "->", rooted_polynomial(r.cycle_index).coefficients)

by_n = {n: enumerate_unlabeled(n) for n in range(1, 7)}
print(export_table(rooted_table(by_n)))
