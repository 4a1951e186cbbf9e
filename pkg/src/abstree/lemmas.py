"""Instance-level checks of the auxiliary inequalities behind the minimum-ABS bound.

Each check rebuilds the comparison tree exactly as the corresponding
argument does (edge contractions, leaf attachment, replacement of a
high-degree vertex by a cubic tree) and records ``ABS(T)`` against
``ABS(T')``. Where the construction involves a free choice, every choice is
tried.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .enumeration import free_trees
from .errors import UnknownLemma
from .graph import Tree, degree_counts, e2_edges, pendent_paths, pendent_vertices
from .indices import abs_value
from .transforms import (
    all_replacements,
    attach_leaf,
    contract_edge,
    contract_edges,
    replace_with_3regular,
)

STRICT_MARGIN = 1e-9
WEAK_SLACK = 1e-12
EXHAUSTIVE_MAX_DEGREE = 6

LEMMAS = ("2.1", "2.2", "2.3", "2.4", "2.5", "2.6")


@dataclass(frozen=True)
class LemmaCheckRecord:
    lemma: str
    instance: str
    lhs: float
    rhs: float
    strict: bool
    passed: bool

    @property
    def outcome(self) -> str:
        return "pass" if self.passed else "fail"


def _compare(lemma: str, instance: str, lhs: float, rhs: float, strict: bool) -> LemmaCheckRecord:
    ok = lhs - rhs > STRICT_MARGIN if strict else lhs >= rhs - WEAK_SLACK
    return LemmaCheckRecord(lemma, instance, lhs, rhs, strict, ok)


def describe(tree: Tree, **chosen) -> str:
    edges = " ".join(f"{u}-{v}" for u, v in tree.edges)
    extra = " ".join(f"{k}={v}" for k, v in chosen.items())
    return f"n={tree.n} [{edges}]" + (f" {extra}" if extra else "")


def abs_gap(x: float, k: float) -> float:
    """sqrt(1 - 2/(x+k)) - sqrt(1 - 2/x)."""
    return math.sqrt(1 - 2 / (x + k)) - math.sqrt(1 - 2 / x)


def check_gap_monotone(ks: Iterable[int] = range(1, 7), lo: int = 30, hi: int = 200) -> list[LemmaCheckRecord]:
    """Strict decrease of ``abs_gap(., k)`` on the grid ``x = lo/10 .. hi/10``."""
    out = []
    for k in ks:
        for i in range(lo, hi):
            x0, x1 = i / 10, (i + 1) / 10
            out.append(_compare("2.1", f"k={k} x={x0:.1f}->{x1:.1f}", abs_gap(x0, k), abs_gap(x1, k), True))
    return out


def check_inner_degree_two(tree: Tree) -> Iterator[LemmaCheckRecord]:
    """Remove a degree-2 vertex with non-leaf neighbors, lengthen a pendent edge."""
    deg = tree.degrees
    base = abs_value(tree)
    leaves = sorted(pendent_vertices(tree))
    for v in range(tree.n):
        if deg[v] != 2:
            continue
        u, w = sorted(tree.neighbors(v))
        if deg[u] < 2 or deg[w] < 2:
            continue
        contracted, relabel = contract_edge(tree, (u, v), return_map=True)
        for x in leaves:
            t2 = attach_leaf(contracted, relabel[x])
            yield _compare("2.2", describe(tree, v=v, x=x), base, abs_value(t2), False)


def check_leaf_at_branch(tree: Tree) -> Iterator[LemmaCheckRecord]:
    """Contract an E_2 edge and lengthen a pendent edge hanging off degree >= 3."""
    deg = tree.degrees
    e2 = sorted(e2_edges(tree))
    if not e2:
        return
    base = abs_value(tree)
    for v in sorted(pendent_vertices(tree)):
        (u,) = tree.neighbors(v)
        if deg[u] < 3:
            continue
        for e in e2:
            contracted, relabel = contract_edge(tree, e, return_map=True)
            t2 = attach_leaf(contracted, relabel[v])
            yield _compare("2.3", describe(tree, u=u, v=v, e2=f"{e[0]}-{e[1]}"), base, abs_value(t2), True)


def _replacement_records(
    lemma: str, tree: Tree, v: int, contract_sets: Iterable[tuple], exhaustive: bool
) -> Iterator[LemmaCheckRecord]:
    base = abs_value(tree)
    for chosen in contract_sets:
        contracted, relabel = contract_edges(tree, chosen, return_map=True)
        v2 = relabel[v]
        tag = ";".join(f"{a}-{b}" for a, b in chosen)
        if exhaustive:
            for i, (shape, assignment, t2) in enumerate(all_replacements(contracted, v2)):
                yield _compare(lemma, describe(tree, v=v, e2=tag, choice=i), base, abs_value(t2), True)
        else:
            t2 = replace_with_3regular(contracted, v2)
            yield _compare(lemma, describe(tree, v=v, e2=tag, choice="default"), base, abs_value(t2), True)


def _sorted_neighbor_degrees(tree: Tree, v: int) -> list[int]:
    return sorted(tree.degree(u) for u in tree.neighbors(v))


def check_degree_four(tree: Tree) -> Iterator[LemmaCheckRecord]:
    """Degree-4 vertex with neighbor degrees (<=3, <=3, <=3, <=5) and E_2 nonempty."""
    e2 = sorted(e2_edges(tree))
    if not e2:
        return
    for v in range(tree.n):
        if tree.degree(v) != 4:
            continue
        d = _sorted_neighbor_degrees(tree, v)
        if d[2] <= 3 and d[3] <= 5:
            yield from _replacement_records("2.4", tree, v, [(e,) for e in e2], True)


def check_high_degree(tree: Tree) -> Iterator[LemmaCheckRecord]:
    """Degree-s vertex (s >= 5 with second-largest neighbor degree <= 3, or
    s >= 12 with it <= 4) and at least s-3 E_2 edges."""
    e2 = sorted(e2_edges(tree))
    for v in range(tree.n):
        s = tree.degree(v)
        if s < 5 or len(e2) < s - 3:
            continue
        second = _sorted_neighbor_degrees(tree, v)[-2]
        if (s >= 5 and second <= 3) or (s >= 12 and second <= 4):
            yield from _replacement_records(
                "2.5", tree, v, combinations(e2, s - 3), s <= EXHAUSTIVE_MAX_DEGREE
            )


def e2_on_pendent_paths(tree: Tree) -> bool:
    on_paths = {e for p in pendent_paths(tree) for e in p.edges()}
    return e2_edges(tree) <= on_paths


def excess_degree(tree: Tree) -> int:
    """n_4 + 2 n_5 + ... + (Delta - 3) n_Delta."""
    return sum((d - 3) * c for d, c in degree_counts(tree).items() if d >= 4)


def check_e2_count(tree: Tree) -> Iterator[LemmaCheckRecord]:
    """|E_2| >= excess degree, when 3 <= k <= floor((n+2)/3) and E_2 lies on pendent paths."""
    k = len(pendent_vertices(tree))
    if not (3 <= k <= (tree.n + 2) // 3) or not e2_on_pendent_paths(tree):
        return
    yield _compare("2.6", describe(tree), float(len(e2_edges(tree))), float(excess_degree(tree)), False)


_TREE_CHECKS: dict[str, Callable[[Tree], Iterator[LemmaCheckRecord]]] = {
    "2.2": check_inner_degree_two,
    "2.3": check_leaf_at_branch,
    "2.4": check_degree_four,
    "2.5": check_high_degree,
    "2.6": check_e2_count,
}


def lemma_suite(lemma: str, n_range: Iterable[int] = range(3, 13)) -> list[LemmaCheckRecord]:
    """Records for every qualifying instance among all trees with ``n`` in ``n_range``.

    ``"2.1"`` ignores ``n_range`` and checks the grid instead.
    """
    lemma = str(lemma)
    if lemma not in LEMMAS:
        raise UnknownLemma(f"unknown lemma {lemma!r}; expected one of {', '.join(LEMMAS)}")
    if lemma == "2.1":
        return check_gap_monotone()
    check = _TREE_CHECKS[lemma]
    return [rec for n in n_range for t in free_trees(n) for rec in check(t)]


def psi(r: int) -> float:
    """Lower bound used to exclude a vertex of degree r next to a degree-4 vertex."""
    return (
        math.sqrt(1 / 2)
        + (r - 1) * math.sqrt((r + 2) / (r + 4))
        - 3 * math.sqrt(3 / 4)
        - (r - 3) * math.sqrt(r / (r + 2))
    )


def psi_checks(rs: Iterable[int] = (6, 7, 8)) -> list[LemmaCheckRecord]:
    return [_compare("psi", f"r={r}", psi(r), 0.0, False) for r in rs]
