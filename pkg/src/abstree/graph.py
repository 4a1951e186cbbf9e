"""Immutable labeled trees, structural queries and canonical codes.

Vertices are the integers ``0..n-1``. A :class:`Tree` validates itself on
construction, so every instance that exists is a tree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadLabel, DuplicateEdge, FormatError, NotATree

Edge = tuple[int, int]
CanonicalCode = bytes


class Tree:
    """A validated, immutable tree on vertices ``0..n-1``.

    Edges are stored normalized as ``(min, max)`` and sorted.
    """

    __slots__ = ("_n", "_edges", "_adj", "_deg", "_code")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if not isinstance(n, int) or n < 1:
            raise BadLabel(f"vertex count must be a positive integer, got {n!r}")
        norm: list[Edge] = []
        seen: set[Edge] = set()
        for e in edges:
            if len(e) != 2:
                raise NotATree(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise BadLabel(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
            if u == v:
                raise NotATree(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge {key} listed twice")
            seen.add(key)
            norm.append(key)
        if len(norm) != n - 1:
            raise NotATree(f"a tree on {n} vertices has {n - 1} edges, got {len(norm)}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        # n-1 edges plus connectivity rules out cycles
        seen_v = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen_v:
                    seen_v.add(y)
                    stack.append(y)
        if len(seen_v) != n:
            raise NotATree(f"graph is disconnected ({len(seen_v)} of {n} vertices reachable from 0)")
        self._n = n
        self._edges = tuple(sorted(norm))
        self._adj = tuple(frozenset(a) for a in adj)
        self._deg = tuple(len(a) for a in adj)
        self._code: CanonicalCode | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def degree(self, v: int) -> int:
        return self._deg[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def max_degree(self) -> int:
        return max(self._deg) if self._n > 1 else 0

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    def canonical_code(self) -> CanonicalCode:
        if self._code is None:
            self._code = canonical_code(self)
        return self._code

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Tree(n={self._n}, edges={list(self._edges)})"

    def __getstate__(self):
        return (self._n, self._edges)

    def __setstate__(self, state):
        n, edges = state
        self.__init__(n, edges)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    return Tree(n, edges)


def degree_counts(tree: Tree) -> dict[int, int]:
    """Map each degree ``i`` to the number of vertices having it."""
    return dict(sorted(Counter(tree.degrees).items()))


def pendent_vertices(tree: Tree) -> frozenset[int]:
    return frozenset(v for v, d in enumerate(tree.degrees) if d == 1)


@dataclass(frozen=True)
class PendentPath:
    """Path ``v_0 .. v_s`` from a leaf through degree-2 vertices to a branch vertex."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def leaf(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:])]


def pendent_paths(tree: Tree) -> list[PendentPath]:
    """All pendent paths, one per leaf, ordered by leaf label.

    Trees with maximum degree at most 2 have no vertex of degree >= 3 to end
    on, so the result is empty for paths.
    """
    if tree.max_degree() < 3:
        return []
    deg = tree.degrees
    paths = []
    for leaf in sorted(pendent_vertices(tree)):
        walk = [leaf]
        prev, cur = -1, leaf
        while True:
            nxt = next(iter(tree.neighbors(cur) - {prev}))
            walk.append(nxt)
            if deg[nxt] != 2:
                break
            prev, cur = cur, nxt
        paths.append(PendentPath(tuple(walk)))
    return paths


def e2_edges(tree: Tree) -> frozenset[Edge]:
    """Edges whose endpoints both have degree 2."""
    deg = tree.degrees
    return frozenset(e for e in tree.edges if deg[e[0]] == 2 and deg[e[1]] == 2)


def centers(tree: Tree) -> list[int]:
    """The one or two central vertices, found by repeatedly stripping leaves."""
    n = tree.n
    if n <= 2:
        return list(range(n))
    deg = list(tree.degrees)
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in tree.neighbors(leaf):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(tree: Tree, root: int, banned: int = -1) -> bytes:
    # AHU encoding, iterative: children before parents
    parent = {root: -1}
    order = [root]
    for x in order:
        for y in tree.neighbors(x):
            if y != parent[x] and y != banned:
                parent[y] = x
                order.append(y)
    kids: dict[int, list[bytes]] = {v: [] for v in order}
    code = b""
    for x in reversed(order):
        code = b"(" + b"".join(sorted(kids[x])) + b")"
        p = parent[x]
        if p >= 0:
            kids[p].append(code)
    return code


def canonical_code(tree: Tree) -> CanonicalCode:
    """Isomorphism-class key: AHU code of the tree rooted at its center.

    For a bicentral tree the central edge is cut, both halves are encoded,
    and the two codes are concatenated in sorted order.
    """
    c = centers(tree)
    if len(c) == 1:
        return b"U" + _rooted_code(tree, c[0])
    a = _rooted_code(tree, c[0], banned=c[1])
    b = _rooted_code(tree, c[1], banned=c[0])
    lo, hi = sorted((a, b))
    return b"B" + lo + hi


def relabel(tree: Tree, perm: Sequence[int]) -> Tree:
    """Apply the vertex permutation ``v -> perm[v]``."""
    return Tree(tree.n, [(perm[u], perm[v]) for u, v in tree.edges])


# -- edge-list text format ----------------------------------------------------


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        yield lineno, line.split()


def parse_edge_lists(text: str) -> list[Tree]:
    """Parse zero or more ``n m`` blocks; blank lines and ``#`` comments are skipped."""
    trees = []
    lines = [(no, toks) for no, toks in _data_lines(text) if toks]
    i = 0
    while i < len(lines):
        no, toks = lines[i]
        if len(toks) != 2:
            raise FormatError(f"line {no}: expected header 'n m', got {' '.join(toks)!r}")
        try:
            n, m = int(toks[0]), int(toks[1])
        except ValueError:
            raise FormatError(f"line {no}: non-integer header") from None
        if m < 0 or m > len(lines) - i - 1:
            raise FormatError(f"line {no}: header promises {m} edges, file ends early")
        edges = []
        for no2, etoks in lines[i + 1 : i + 1 + m]:
            if len(etoks) != 2:
                raise FormatError(f"line {no2}: expected 'u v'")
            try:
                edges.append((int(etoks[0]), int(etoks[1])))
            except ValueError:
                raise FormatError(f"line {no2}: non-integer vertex label") from None
        trees.append(Tree(n, edges))
        i += 1 + m
    return trees


def parse_edge_list(text: str) -> Tree:
    trees = parse_edge_lists(text)
    if len(trees) != 1:
        raise FormatError(f"expected exactly one tree, found {len(trees)}")
    return trees[0]


def read_edge_list(path) -> Tree:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def format_edge_list(tree: Tree) -> str:
    lines = [f"{tree.n} {len(tree.edges)}"]
    lines += [f"{u} {v}" for u, v in tree.edges]
    return "\n".join(lines) + "\n"


def format_edge_lists(trees: Iterable[Tree]) -> str:
    return "\n".join(format_edge_list(t) for t in trees)
