"""Named tree families: paths, stars, spiders, (k,3)-regular trees and the
extremal family of subdivided (k,3)-regular trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

from .errors import BadParameters, OutOfRange
from .graph import Tree, canonical_code, degree_counts, pendent_paths, pendent_vertices
from .transforms import k3_regular_shapes, subdivide_edge


def make_path(n: int) -> Tree:
    if n < 1:
        raise BadParameters(f"path needs n >= 1, got {n}")
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Tree:
    """Star on ``n`` vertices with center 0."""
    if n < 1:
        raise BadParameters(f"star needs n >= 1, got {n}")
    return Tree(n, [(0, i) for i in range(1, n)])


def make_spider(legs: Sequence[int]) -> Tree:
    """Center 0 with pendent paths of the given lengths (edges per leg)."""
    legs = list(legs)
    if len(legs) < 3 or any(int(x) < 1 for x in legs):
        raise BadParameters(f"spider needs >= 3 legs of length >= 1, got {legs}")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, edges)


def tstar_range(n: int) -> range:
    """Leaf counts ``k`` with ``3 <= k <= floor((n+2)/3)``."""
    return range(3, (n + 2) // 3 + 1)


def check_tstar_range(n: int, k: int) -> None:
    if k not in tstar_range(n):
        raise OutOfRange(f"need 3 <= k <= floor((n+2)/3) = {(n + 2) // 3}, got n={n}, k={k}")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def tstar_family(n: int, k: int) -> list[Tree]:
    """Non-isomorphic trees obtained by subdividing every pendent edge of a
    (k,3)-regular tree at least once, ``n`` vertices in total.
    """
    check_tstar_range(n, k)
    budget = n - (2 * k - 2)
    found: dict[bytes, Tree] = {}
    for shape in k3_regular_shapes(k):
        leaves = sorted(pendent_vertices(shape))
        pendent = [(leaf, next(iter(shape.neighbors(leaf)))) for leaf in leaves]
        for comp in compositions(budget, k):
            t = shape
            for (leaf, hub), extra in zip(pendent, comp):
                # the original edge labels survive subdivision, so reuse them
                t = subdivide_edge(t, (leaf, hub), extra)
            found.setdefault(canonical_code(t), t)
    return list(found.values())


def is_tstar_member(tree: Tree) -> bool:
    """Degree-theoretic test for membership in the extremal family.

    Max degree 3, the degree-3 vertices induce a connected subtree, every
    pendent path has at least two edges, and the degree counts are
    ``{1: k, 2: n-2k+2, 3: k-2}`` with ``k`` the leaf count.
    """
    if tree.max_degree() != 3:
        return False
    n = tree.n
    k = len(pendent_vertices(tree))
    want = {1: k, 2: n - 2 * k + 2, 3: k - 2}
    if degree_counts(tree) != {d: c for d, c in want.items() if c}:
        return False
    hubs = {v for v, d in enumerate(tree.degrees) if d == 3}
    start = next(iter(hubs))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in tree.neighbors(x):
            if y in hubs and y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != hubs:
        return False
    return all(p.length >= 2 for p in pendent_paths(tree))


class FamilyKind(str, Enum):
    PATH = "path"
    STAR = "star"
    SPIDER = "spider"
    K3REGULAR = "k3regular"
    TSTAR = "tstar"


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: FamilyKind
    n: int | None = None
    k: int | None = None
    legs: tuple[int, ...] = field(default=())

    def build(self) -> list[Tree]:
        kind = FamilyKind(self.kind)
        if kind is FamilyKind.PATH:
            return [make_path(_need(self.n, "n"))]
        if kind is FamilyKind.STAR:
            return [make_star(_need(self.n, "n"))]
        if kind is FamilyKind.SPIDER:
            return [make_spider(self.legs)]
        if kind is FamilyKind.K3REGULAR:
            return k3_regular_shapes(_need(self.k, "k"))
        return tstar_family(_need(self.n, "n"), _need(self.k, "k"))


def _need(value: int | None, name: str) -> int:
    if value is None:
        raise BadParameters(f"this family needs parameter {name}")
    return value
