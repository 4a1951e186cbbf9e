"""Edge contraction, vertex splitting and replacement by an (s,3)-regular tree.

All three return new trees on contiguous labels ``0..n'-1``. Operations that
delete a vertex can also return the old-to-new label map (``return_map``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .enumeration import free_trees
from .errors import BadArity, BadAssignment, BadPartition, NotAnEdge, ShapeMismatch
from .graph import Tree, canonical_code, pendent_vertices


def contract_edge(tree: Tree, edge: Sequence[int], return_map: bool = False):
    """Identify the endpoints of ``edge``.

    The merged vertex takes the smaller label; labels above the larger
    endpoint shift down by one.
    """
    u, v = sorted((int(edge[0]), int(edge[1])))
    if not tree.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge of the tree")
    mapping = {}
    for x in range(tree.n):
        if x == v:
            mapping[x] = u
        else:
            mapping[x] = x - 1 if x > v else x
    edges = [(mapping[a], mapping[b]) for a, b in tree.edges if (a, b) != (u, v)]
    out = Tree(tree.n - 1, edges)
    return (out, mapping) if return_map else out


def contract_edges(tree: Tree, edges: Iterable[Sequence[int]], return_map: bool = False):
    """Contract several edges of ``tree`` (given in its original labels)."""
    mapping = {x: x for x in range(tree.n)}
    out = tree
    for a, b in edges:
        out, step = contract_edge(out, (mapping[a], mapping[b]), return_map=True)
        mapping = {x: step[y] for x, y in mapping.items()}
    return (out, mapping) if return_map else out


@dataclass(frozen=True)
class SplitSpec:
    """Split ``v`` into ``v'`` (adjacent to ``left``) and ``v''`` (adjacent to ``right``)."""

    v: int
    left: frozenset[int]
    right: frozenset[int]

    def __init__(self, v: int, left: Iterable[int], right: Iterable[int]):
        object.__setattr__(self, "v", int(v))
        object.__setattr__(self, "left", frozenset(left))
        object.__setattr__(self, "right", frozenset(right))

    def validate(self, tree: Tree) -> None:
        if not 0 <= self.v < tree.n:
            raise BadPartition(f"vertex {self.v} not in tree")
        nbrs = tree.neighbors(self.v)
        if not self.left or not self.right:
            raise BadPartition("both sides of a split need at least one neighbor")
        if self.left & self.right or (self.left | self.right) != nbrs:
            raise BadPartition(f"{sorted(self.left)} | {sorted(self.right)} is not a partition of N({self.v}) = {sorted(nbrs)}")


def split_vertex(tree: Tree, spec: SplitSpec) -> Tree:
    """``v'`` keeps label ``v``; ``v''`` is the new vertex ``n``."""
    spec.validate(tree)
    v, new = spec.v, tree.n
    edges = [e for e in tree.edges if v not in e]
    edges += [(v, x) for x in spec.left]
    edges += [(new, x) for x in spec.right]
    edges.append((v, new))
    return Tree(tree.n + 1, edges)


def _internal_to_shape(internal: Tree) -> Tree:
    # pad every internal vertex to degree 3 with fresh leaves
    m = internal.n
    edges = list(internal.edges)
    nxt = m
    for x in range(m):
        for _ in range(3 - internal.degree(x)):
            edges.append((x, nxt))
            nxt += 1
    return Tree(nxt, edges)


def _is_path(t: Tree) -> bool:
    return t.max_degree() <= 2


def k3_regular_shapes(s: int) -> list[Tree]:
    """All non-isomorphic trees with ``s`` leaves whose other vertices have degree 3.

    Internal vertices are labeled ``0..s-3`` and leaves ``s-2..2s-3``. The
    caterpillar (path of internal vertices) comes first.
    """
    if s < 3:
        raise BadArity(f"(s,3)-regular trees need s >= 3, got {s}")
    # stripping the leaves leaves a tree on s-2 vertices with max degree <= 3
    internals = [t for t in free_trees(s - 2) if t.max_degree() <= 3]
    internals.sort(key=lambda t: (not _is_path(t), canonical_code(t)))
    shapes = []
    for t in internals:
        if _is_path(t) and t.n > 1:
            # relabel so the backbone runs 0-1-...-(m-1)
            ends = [x for x in range(t.n) if t.degree(x) == 1]
            order = [ends[0]]
            while len(order) < t.n:
                order.append(next(y for y in t.neighbors(order[-1]) if y not in order))
            pos = {x: i for i, x in enumerate(order)}
            t = Tree(t.n, [(pos[a], pos[b]) for a, b in t.edges])
        shapes.append(_internal_to_shape(t))
    return shapes


def default_shape(s: int) -> Tree:
    return k3_regular_shapes(s)[0]


def is_k3_regular(shape: Tree, s: int) -> bool:
    degs = shape.degrees
    return shape.n == 2 * s - 2 and degs.count(1) == s and all(d in (1, 3) for d in degs)


def replace_with_3regular(
    tree: Tree,
    v: int,
    shape: Tree | None = None,
    assignment: Mapping[int, int] | None = None,
) -> Tree:
    """Replace ``v`` (degree ``s >= 4``) by an (s,3)-regular tree.

    ``assignment`` maps each leaf of ``shape`` to the neighbor of ``v`` it is
    identified with. By default neighbors in descending degree order (ties by
    label) go to shape leaves in ascending label order. Vertex ``v``'s label is
    reused for the first internal vertex; the rest are appended.
    """
    s = tree.degree(v)
    if s < 4:
        raise BadArity(f"vertex {v} has degree {s}; replacement needs degree >= 4")
    if shape is None:
        shape = default_shape(s)
    elif not is_k3_regular(shape, s):
        raise ShapeMismatch(f"shape is not an ({s},3)-regular tree")
    leaves = sorted(pendent_vertices(shape))
    nbrs = tree.neighbors(v)
    if assignment is None:
        ranked = sorted(nbrs, key=lambda x: (-tree.degree(x), x))
        assignment = dict(zip(leaves, ranked))
    if set(assignment) != set(leaves) or sorted(assignment.values()) != sorted(nbrs):
        raise BadAssignment("assignment must biject the shape's leaves onto N(v)")
    internal = [x for x in range(shape.n) if shape.degree(x) == 3]
    label = {internal[0]: v}
    for i, x in enumerate(internal[1:]):
        label[x] = tree.n + i
    edges = [e for e in tree.edges if v not in e]
    for a, b in shape.edges:
        if a in label and b in label:
            edges.append((label[a], label[b]))
    for leaf in leaves:
        (attach,) = shape.neighbors(leaf)
        edges.append((label[attach], assignment[leaf]))
    return Tree(tree.n + s - 3, edges)


def all_replacements(tree: Tree, v: int) -> Iterator[tuple[Tree, dict[int, int], Tree]]:
    """Every (shape, assignment) choice for replacing ``v``; yields (shape, assignment, result)."""
    s = tree.degree(v)
    nbrs = sorted(tree.neighbors(v))
    for shape in k3_regular_shapes(s):
        leaves = sorted(pendent_vertices(shape))
        for perm in permutations(nbrs):
            assignment = dict(zip(leaves, perm))
            yield shape, assignment, replace_with_3regular(tree, v, shape, assignment)


def attach_leaf(tree: Tree, v: int) -> Tree:
    """Add a new pendent vertex ``n`` adjacent to ``v``."""
    return Tree(tree.n + 1, list(tree.edges) + [(v, tree.n)])


def subdivide_edge(tree: Tree, edge: Sequence[int], times: int = 1) -> Tree:
    """Insert ``times`` new degree-2 vertices along ``edge``."""
    u, v = sorted(edge)
    if not tree.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge of the tree")
    edges = [e for e in tree.edges if e != (u, v)]
    chain = [u] + list(range(tree.n, tree.n + times)) + [v]
    edges += list(zip(chain, chain[1:]))
    return Tree(tree.n + times, edges)
