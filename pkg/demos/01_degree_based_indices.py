"""
Degree-based indices of small trees
===================================

Every index in the package is a sum over edges of a term that depends only
on the two endpoint degrees. We build a few trees, look at their edge-type
histograms, and evaluate all six indices.
"""

# %%
from abstree import (
    ABC, ABS, HARMONIC, RANDIC, SUM_CONNECTIVITY,
    edge_type_histogram, general_sum_connectivity, index_value,
    make_path, make_spider, make_star,
)

trees = {
    "P_6": make_path(6),
    "S_6": make_star(6),
    "spider(2,2,1)": make_spider([2, 2, 1]),
}

# %%
# The histogram is the only thing the index formulas look at.
for name, t in trees.items():
    print(f"{name:>14}: {dict(edge_type_histogram(t))}")

# %%
kinds = [ABS, RANDIC, SUM_CONNECTIVITY, general_sum_connectivity(-0.5), HARMONIC, ABC]
print(f"{'':>14}" + "".join(f"{k.name:>12}" for k in kinds))
for name, t in trees.items():
    h = edge_type_histogram(t)
    print(f"{name:>14}" + "".join(f"{index_value(h, k).value:12.6f}" for k in kinds))

# %%
# Histograms can also describe graphs that are not trees. A 6-cycle has six
# (2,2) edges:
print("ABS(C_6) =", index_value({(2, 2): 6}, ABS).value)
