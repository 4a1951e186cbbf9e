"""
Minimum ABS index among trees with k leaves
===========================================

For 3 <= k <= floor((n+2)/3) the minimum over all trees with n vertices and
k leaves is

    k (sqrt(1/3) + sqrt(3/5)) + (n - 3k + 2) sqrt(1/2) + (k - 3) sqrt(2/3),

reached exactly by trees obtained from a tree with all internal degrees 3 by
subdividing every pendent edge at least once. Here we check both halves of
that statement by brute force and look at what happens outside the range.
"""

# %%
from abstree.families import tstar_family
from abstree.verify import formula_min_abs, min_abs_bruteforce, theorem_grid, verify_theorem

print(" n  k   trees  formula      brute force  minimizers  verdict")
for n, k in theorem_grid(7, 16):
    r = verify_theorem(n, k)
    print(f"{n:2d} {k:2d} {r.class_size:7d}  {r.formula_value:.9f}  {r.bruteforce_min:.9f}  {len(r.argmin_codes):10d}  {r.verdict}")

# %%
# Restricting to chemical trees does not change the minimum.
for n, k in [(12, 4), (14, 5), (16, 6)]:
    print(n, k, min_abs_bruteforce(n, k, chemical=True).minimum - formula_min_abs(n, k))

# %%
# Outside the range the formula no longer applies; the brute-force minimum
# is still available.
for n, k in [(9, 4), (12, 5), (14, 6)]:
    res = min_abs_bruteforce(n, k)
    print(f"n={n} k={k}: min ABS {res.minimum:.6f} over {res.class_size} trees, {len(res.argmin_codes)} minimizer(s)")

# %%
# The extremal family itself.
for t in tstar_family(12, 4):
    print(t.edges)
