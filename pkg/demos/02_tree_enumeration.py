"""
Enumerating non-isomorphic trees
================================

Free trees are generated one isomorphism class at a time. We reproduce the
census of small trees, split it by the number of leaves, and check the
generator against decoding Prufer sequences.
"""

# %%
import time
from collections import Counter

from abstree.enumeration import FREE_TREE_COUNTS, free_trees, prufer_free_trees
from abstree.graph import canonical_code

for n in range(1, 17):
    start = time.perf_counter()
    count = sum(1 for _ in free_trees(n))
    print(f"n={n:2d}: {count:6d} trees (census {FREE_TREE_COUNTS[n]:6d})  {time.perf_counter() - start:.2f}s")

# %%
# Number of trees on 12 vertices by leaf count, and how many of them are
# chemical trees (maximum degree at most 4).
n = 12
by_k = Counter()
chem = Counter()
for t in free_trees(n):
    k = t.degrees.count(1)
    by_k[k] += 1
    chem[k] += t.max_degree() <= 4
for k in sorted(by_k):
    print(f"k={k:2d}: {by_k[k]:4d} trees, {chem[k]:4d} chemical")

# %%
# Independent check: decode labeled trees and keep one per canonical code.
for n in range(4, 10):
    same = {canonical_code(t) for t in free_trees(n)} == {canonical_code(t) for t in prufer_free_trees(n)}
    print(f"n={n}: generator agrees with Prufer decoding: {same}")
