# Counting 2-regular digraphs (loops and multiarcs allowed) by weak components.
#
# Run from the repository root after `pip install -e .`:
#     python demos/01_count_tables.py
from math import factorial

from regdigraph import assemble_unlabeled_table, classify_by_components, enumerate_unlabeled
from regdigraph.formats import export_table
from regdigraph.transforms import bell_table, egf_table

MAX_N = 6

# One record per isomorphism class, already in canonical form.
by_n = {n: enumerate_unlabeled(n) for n in range(1, MAX_N + 1)}
for n, recs in by_n.items():
    print(n, len(recs), classify_by_components(recs))

# The unlabeled table is checked against the multiset transform of the
# connected column while it is assembled; a mismatch would raise.
unlabeled = assemble_unlabeled_table(by_n)
print(export_table(unlabeled))

# Each class stands for n!/|Aut| labeled graphs.  Summing that over the
# connected classes gives the connected labeled counts ...
connected = [sum(factorial(n) // r.aut_order for r in recs if r.components == 1) for n, recs in by_n.items()]
print("connected labeled:", connected)

# ... and the Bell transform (or equivalently exp(t * A(x))) spreads them
# over the component counts.
labeled = bell_table(connected, MAX_N)
assert labeled == egf_table(connected, MAX_N)
print(export_table(labeled))
