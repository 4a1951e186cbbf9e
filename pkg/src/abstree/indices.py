"""Degree-based edge-sum indices evaluated from an edge-type histogram.

Every index here is a sum over edges of a term depending only on the
endpoint degrees ``a <= b``, so the histogram of unordered degree pairs is a
sufficient statistic. Histograms can be built from a :class:`~abstree.graph.Tree`
or supplied directly for arbitrary graphs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import chain, repeat
from typing import Callable, Mapping

from .errors import BadParameters
from .graph import Tree

DegreePair = tuple[int, int]


class Kind(str, Enum):
    ABS = "abs"
    RANDIC = "randic"
    SUM_CONNECTIVITY = "sumconn"
    GENERAL_SUM_CONNECTIVITY = "gensumconn"
    HARMONIC = "harmonic"
    ABC = "abc"


@dataclass(frozen=True)
class IndexKind:
    """An index family member; ``alpha`` is used only by general sum-connectivity."""

    kind: Kind
    alpha: float | None = None

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is Kind.GENERAL_SUM_CONNECTIVITY:
            if self.alpha is None or not math.isfinite(self.alpha):
                raise BadParameters("general sum-connectivity needs a finite alpha")
        elif self.alpha is not None:
            raise BadParameters(f"alpha is only meaningful for {Kind.GENERAL_SUM_CONNECTIVITY.value}")

    @property
    def name(self) -> str:
        return self.kind.value

    def term(self, a: int, b: int) -> float:
        return _TERMS[self.kind](a, b, self.alpha)


ABS = IndexKind(Kind.ABS)
RANDIC = IndexKind(Kind.RANDIC)
SUM_CONNECTIVITY = IndexKind(Kind.SUM_CONNECTIVITY)
HARMONIC = IndexKind(Kind.HARMONIC)
ABC = IndexKind(Kind.ABC)


def general_sum_connectivity(alpha: float) -> IndexKind:
    return IndexKind(Kind.GENERAL_SUM_CONNECTIVITY, float(alpha))


def abs_term(a: int, b: int) -> float:
    return math.sqrt((a + b - 2) / (a + b))


_TERMS: dict[Kind, Callable[[int, int, float | None], float]] = {
    Kind.ABS: lambda a, b, _: abs_term(a, b),
    Kind.RANDIC: lambda a, b, _: 1.0 / math.sqrt(a * b),
    Kind.SUM_CONNECTIVITY: lambda a, b, _: 1.0 / math.sqrt(a + b),
    Kind.GENERAL_SUM_CONNECTIVITY: lambda a, b, alpha: float(a + b) ** alpha,
    Kind.HARMONIC: lambda a, b, _: 2.0 / (a + b),
    Kind.ABC: lambda a, b, _: math.sqrt((a + b - 2) / (a * b)),
}


class EdgeTypeHistogram(Mapping[DegreePair, int]):
    """Immutable multiset of unordered endpoint-degree pairs ``(a, b)``, ``a <= b``."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[DegreePair, int] | None = None):
        merged: Counter[DegreePair] = Counter()
        for (a, b), c in (counts or {}).items():
            a, b = int(a), int(b)
            if a < 1 or b < 1:
                raise BadParameters(f"degrees must be >= 1, got ({a}, {b})")
            if c < 0:
                raise BadParameters(f"negative count for ({a}, {b})")
            if c:
                merged[(min(a, b), max(a, b))] += int(c)
        self._counts = dict(sorted(merged.items()))

    def __getitem__(self, key: DegreePair) -> int:
        a, b = key
        return self._counts.get((min(a, b), max(a, b)), 0)

    def __iter__(self):
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __add__(self, other: EdgeTypeHistogram) -> EdgeTypeHistogram:
        merged = Counter(self._counts)
        merged.update(other._counts)
        return EdgeTypeHistogram(merged)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EdgeTypeHistogram):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self == EdgeTypeHistogram(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        return f"EdgeTypeHistogram({self._counts})"

    def total(self) -> int:
        return sum(self._counts.values())


@dataclass(frozen=True)
class IndexValue:
    value: float
    kind: IndexKind

    def __float__(self) -> float:
        return self.value


def edge_type_histogram(tree: Tree) -> EdgeTypeHistogram:
    deg = tree.degrees
    return EdgeTypeHistogram(Counter((deg[u], deg[v]) for u, v in tree.edges))


def index_value(hist: Mapping[DegreePair, int], kind: IndexKind = ABS) -> IndexValue:
    # fsum over the repeated terms is correctly rounded: independent of edge order
    terms = chain.from_iterable(repeat(kind.term(a, b), c) for (a, b), c in EdgeTypeHistogram(hist).items())
    return IndexValue(math.fsum(terms), kind)


def abs_index(tree: Tree) -> IndexValue:
    return index_value(edge_type_histogram(tree), ABS)


def abs_value(tree: Tree) -> float:
    """ABS as a bare float, skipping the histogram object (hot path for sweeps)."""
    deg = tree.degrees
    table = _ABS_BY_SUM
    terms = []
    for u, v in tree.edges:
        s = deg[u] + deg[v]
        terms.append(table[s] if s < len(table) else math.sqrt((s - 2) / s))
    return math.fsum(terms)


# indexed by d_u + d_v; same expression as abs_term so both paths agree bitwise
_ABS_BY_SUM = [0.0, 0.0] + [math.sqrt((s - 2) / s) for s in range(2, 64)]


def parse_kind(name: str, alpha: float | None = None) -> IndexKind:
    return IndexKind(Kind(name), alpha)
