"""Unlabeled k-regular digraphs with loops and multiarcs (k = 2 in particular)."""
from .canonical import (
    AutomorphismGroup,
    apply_permutation,
    automorphism_group,
    canonical_form,
)
from .core import (
    ComponentPartition,
    Digraph,
    from_arc_list,
    is_k_regular,
    loop_count,
    multiarc_count,
    to_arc_list,
    weak_components,
)
from .enumerate import (
    BudgetExceeded,
    EnumerationFilter,
    GraphRecord,
    classify_by_components,
    count_labeled,
    enumerate_unlabeled,
)
from .polya import CycleIndex, RootedPolynomial, cycle_index_of, labeled_count, rooted_polynomial, rooted_table
from .transforms import CountTable, assemble_unlabeled_table, bell_transform, multiset_transform, verify_egf

__version__ = "0.1.0"
