"""Degree-based topological indices of trees, centred on the atom-bond
sum-connectivity (ABS) index, with exhaustive tools for checking the
minimum ABS index of trees with a given number of leaves.
"""

from .enumeration import chemical_trees, free_trees, trees_with_k_leaves
from .errors import TreeError
from .families import is_tstar_member, make_path, make_spider, make_star, tstar_family
from .graph import (
    PendentPath,
    Tree,
    canonical_code,
    degree_counts,
    e2_edges,
    from_edge_list,
    pendent_paths,
    pendent_vertices,
)
from .indices import (
    ABC,
    ABS,
    HARMONIC,
    RANDIC,
    SUM_CONNECTIVITY,
    EdgeTypeHistogram,
    IndexKind,
    abs_index,
    edge_type_histogram,
    general_sum_connectivity,
    index_value,
)
from .transforms import SplitSpec, contract_edge, k3_regular_shapes, replace_with_3regular, split_vertex
from .verify import formula_min_abs, min_abs_bruteforce, verify_theorem

__version__ = "0.1.0"
