"""
Contracting, splitting and cubic replacement
============================================

The three tree moves used to push a tree towards smaller ABS index. The last
cell rebuilds the worked example of replacing a degree-5 vertex by a tree
whose internal vertices all have degree 3.
"""

# %%
from abstree import SplitSpec, Tree, abs_index, contract_edge, k3_regular_shapes, make_star, split_vertex
from abstree.graph import canonical_code, degree_counts
from abstree.transforms import all_replacements, replace_with_3regular

# %%
# Contraction removes one vertex, splitting adds one.
star = make_star(7)
double_star = split_vertex(star, SplitSpec(0, {1, 2, 3}, {4, 5, 6}))
print("split K_1,6:", degree_counts(double_star))
back, mapping = contract_edge(double_star, (0, 7), return_map=True)
print("contract it back is a star again:", canonical_code(back) == canonical_code(star))

# %%
# Cubic trees with s leaves: one shape up to s = 5, then more.
for s in range(3, 9):
    print(f"s={s}: {len(k3_regular_shapes(s))} shape(s) on {2 * s - 2} vertices")

# %%
# Degree-5 vertex 0 with neighbours of degree 4, 2, 3, 1, 1.
t = Tree(12, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (1, 8), (2, 9), (3, 10), (3, 11)])
default = replace_with_3regular(t, 0)
print("default replacement:", default.n, "vertices, ABS", round(abs_index(default).value, 6), "vs", round(abs_index(t).value, 6))

distinct = {canonical_code(r): r for _, _, r in all_replacements(t, 0)}
print(f"{len(distinct)} non-isomorphic results over all 120 leaf assignments")

# %%
# Each neighbour ends up next to a degree-3 vertex whatever the assignment,
# so the edge-type histogram and hence the index never change.
print("distinct ABS values:", sorted({round(abs_index(r).value, 12) for r in distinct.values()}))
