"""Non-isomorphic free tree generation.

The main generator walks canonical level sequences of center-rooted trees
in the order of Wright, Richmond, Odlyzko and McKay (1986), producing each
free tree exactly once in constant amortized time per tree. A labeled-tree
oracle built on Prufer sequences is kept for cross-checking at small sizes.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .errors import OutOfRange
from .graph import Tree, canonical_code

MAX_ORDER = 22

# free trees on n vertices, n = 0..22 (OEIS A000055)
FREE_TREE_COUNTS = (
    1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
    48629, 123867, 317955, 823065, 2144505, 5623756,
)


def _check_order(n: int) -> None:
    if not (1 <= n <= MAX_ORDER):
        raise OutOfRange(f"n must lie in 1..{MAX_ORDER}, got {n}")


def _check_leaves(n: int, k: int) -> None:
    _check_order(n)
    if n < 3 or not (2 <= k <= n - 1):
        raise OutOfRange(f"leaf count k must satisfy 2 <= k <= n-1 with n >= 3, got n={n}, k={k}")


def level_sequence_to_tree(levels: Sequence[int]) -> Tree:
    """Build a tree from a preorder depth sequence (root at depth 0)."""
    edges = []
    stack: list[int] = []
    for v, d in enumerate(levels):
        del stack[d:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    # Beyer-Hedetniemi successor of a canonical rooted level sequence
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    # first principal subtree (shifted up one level) and the remainder
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    left, rest = _split(candidate)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def free_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences, one per free tree on ``n`` vertices."""
    _check_order(n)
    if n <= 2:
        yield tuple(range(n))
        return
    # start from the path rooted at its center
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is not None:
            yield tuple(layout)
            layout = _next_rooted(layout)


def free_trees(n: int) -> Iterator[Tree]:
    """Every free tree on ``n`` vertices exactly once, in a fixed order."""
    for levels in free_level_sequences(n):
        yield level_sequence_to_tree(levels)


def trees_with_k_leaves(n: int, k: int) -> Iterator[Tree]:
    _check_leaves(n, k)
    for t in free_trees(n):
        if t.degrees.count(1) == k:
            yield t


def chemical_trees(n: int, k: int, max_degree: int = 4) -> Iterator[Tree]:
    """Trees on ``n`` vertices with ``k`` leaves and maximum degree at most ``max_degree``."""
    for t in trees_with_k_leaves(n, k):
        if t.max_degree() <= max_degree:
            yield t


# -- Prufer oracle -------------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> Tree:
    """Labeled tree on ``0..n-1`` with the given Prufer sequence (length n-2)."""
    if n < 2 or len(seq) != n - 2:
        raise OutOfRange(f"a Prufer sequence for n={n} has length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i, d in enumerate(degree) if d == 1)
    edges.append((u, v))
    return Tree(n, edges)


def labeled_trees(n: int) -> Iterator[Tree]:
    """All ``n**(n-2)`` labeled trees."""
    if n == 1:
        yield Tree(1, [])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def _partitions(total: int, parts: int, cap: int) -> Iterator[list[int]]:
    # nonincreasing lists of length `parts` summing to `total`, entries <= cap
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield [first] + rest


def _multiset_permutations(counts: list[int]) -> Iterator[list[int]]:
    total = sum(counts)
    out: list[int] = []

    def rec():
        if len(out) == total:
            yield list(out)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                out.append(sym)
                yield from rec()
                out.pop()
                counts[sym] += 1

    yield from rec()


def prufer_free_trees(n: int, exhaustive: bool = False) -> list[Tree]:
    """Isomorphism-class representatives via Prufer decoding and code dedupe.

    With ``exhaustive=True`` every labeled tree is decoded. Otherwise only
    labelings whose degrees are nonincreasing in the vertex label are decoded;
    every isomorphism class has such a labeling, and vertex ``i`` appears
    ``deg(i) - 1`` times in the Prufer sequence, so these sequences are the
    permutations of multisets with nonincreasing multiplicities.
    """
    if n <= 2:
        return [Tree(n, [(0, 1)] if n == 2 else [])]
    if exhaustive:
        source: Iterator[Tree] = labeled_trees(n)
    else:
        source = (
            prufer_decode(seq, n)
            for mult in _partitions(n - 2, n, n - 2)
            for seq in _multiset_permutations(mult)
        )
    seen: dict[bytes, Tree] = {}
    for t in source:
        seen.setdefault(canonical_code(t), t)
    return list(seen.values())
