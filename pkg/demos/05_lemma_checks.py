"""
Checking the auxiliary inequalities instance by instance
========================================================

Each auxiliary step compares a tree with a modified tree. The suite runs every
qualifying tree up to 12 vertices, trying every free choice in the
construction. Some of these inequalities do not hold in general, and the
last cells build trees just past that size where they fail.
"""

# %%
from abstree.graph import Tree
from abstree.lemmas import LEMMAS, check_degree_four, check_high_degree, lemma_suite, psi_checks

for lemma in LEMMAS:
    recs = lemma_suite(lemma, range(3, 13))
    failed = sum(not r.passed for r in recs)
    margin = min((r.lhs - r.rhs for r in recs), default=float("nan"))
    print(f"{lemma}: {len(recs):6d} instances, {failed} failures, smallest lhs-rhs {margin:.6f}")

# %%
# A degree-4 vertex whose neighbours have degrees 3, 3, 3, 4 meets the
# hypotheses of the degree-4 step, but replacing it raises the index.
edges = [(0, 1), (0, 2), (0, 3), (0, 4),
         (1, 5), (1, 6), (2, 7), (2, 8), (3, 9), (3, 10), (4, 11), (4, 12), (4, 13),
         (13, 14), (14, 15)]
t = Tree(16, edges)
worst = min((r for r in check_degree_four(t) if " v=0 " in r.instance), key=lambda r: r.lhs - r.rhs)
print("degree-4 step:", worst.lhs, "->", worst.rhs, worst.outcome)

# %%
# Same for a degree-5 vertex with neighbour degrees 3, 3, 3, 3, 7.
edges = [(0, i) for i in range(1, 6)]
nxt = 6
for hub, extra in ((1, 2), (2, 2), (3, 2), (4, 2), (5, 6)):
    for _ in range(extra):
        edges.append((hub, nxt))
        nxt += 1
edges += [(nxt - 1, nxt), (nxt, nxt + 1), (nxt + 1, nxt + 2)]
t = Tree(nxt + 3, edges)
recs = [r for r in check_high_degree(t) if " v=0 " in r.instance]
print("degree-5 step:", len(recs), "choices,", sum(r.passed for r in recs), "decrease ABS")

# %%
# The bound used to rule out a degree-6 or degree-7 vertex next to a degree-4 one.
for r in psi_checks():
    print(r.instance, round(r.lhs, 6), r.outcome)
