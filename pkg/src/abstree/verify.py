"""Brute-force checks of the minimum-ABS bound for trees with k leaves."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator

from .enumeration import _check_leaves, free_level_sequences, level_sequence_to_tree
from .families import check_tstar_range, tstar_family
from .graph import CanonicalCode, Tree, canonical_code
from .indices import abs_value

DEFAULT_TOLERANCE = 1e-9
CHEMICAL_MAX_DEGREE = 4

_ROOT_THIRD = math.sqrt(1 / 3)
_ROOT_THREE_FIFTHS = math.sqrt(3 / 5)
_ROOT_HALF = math.sqrt(1 / 2)
_ROOT_TWO_THIRDS = math.sqrt(2 / 3)


def formula_min_abs(n: int, k: int) -> float:
    """Closed-form minimum ABS over trees with ``n`` vertices and ``k`` leaves.

    Valid for ``3 <= k <= floor((n+2)/3)``; attained exactly by the
    subdivided (k,3)-regular trees.
    """
    check_tstar_range(n, k)
    return math.fsum([
        k * _ROOT_THIRD,
        k * _ROOT_THREE_FIFTHS,
        (n - 3 * k + 2) * _ROOT_HALF,
        (k - 3) * _ROOT_TWO_THIRDS,
    ])


@dataclass
class _Best:
    """Running (min, near-min candidates); merging two is associative and commutative."""

    tolerance: float
    value: float = math.inf
    candidates: list[tuple[float, Tree]] = field(default_factory=list)
    count: int = 0

    def add(self, v: float, tree: Tree) -> None:
        self.count += 1
        if v > self.value + self.tolerance:
            return
        if v < self.value:
            self.value = v
            self.candidates = [c for c in self.candidates if c[0] <= v + self.tolerance]
        self.candidates.append((v, tree))

    def merge(self, other: _Best) -> None:
        self.count += other.count
        self.value = min(self.value, other.value)
        pool = self.candidates + other.candidates
        self.candidates = [c for c in pool if c[0] <= self.value + self.tolerance]


def _admissible(tree: Tree, k: int, max_degree: int | None) -> bool:
    if tree.degrees.count(1) != k:
        return False
    return max_degree is None or tree.max_degree() <= max_degree


def _scan(levels: Iterable[tuple[int, ...]], k: int, max_degree: int | None, tolerance: float) -> _Best:
    best = _Best(tolerance)
    for lv in levels:
        t = level_sequence_to_tree(lv)
        if _admissible(t, k, max_degree):
            best.add(abs_value(t), t)
    return best


def _scan_job(args) -> _Best:
    return _scan(*args)


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    while chunk := list(islice(it, size)):
        yield chunk


@dataclass(frozen=True)
class BruteForceResult:
    minimum: float
    argmin_codes: frozenset[CanonicalCode]
    argmin_trees: tuple[Tree, ...]
    class_size: int

    def __iter__(self):
        # unpacks as (minimum, codes)
        return iter((self.minimum, self.argmin_codes))


def min_abs_bruteforce(
    n: int,
    k: int,
    chemical: bool = False,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
    chunk_size: int = 4096,
) -> BruteForceResult:
    """Exhaustive minimum of ABS over all trees with ``n`` vertices and ``k`` leaves.

    ``argmin_codes`` holds every class within ``tolerance`` of the minimum.
    The result does not depend on ``workers``.
    """
    _check_leaves(n, k)
    max_degree = CHEMICAL_MAX_DEGREE if chemical else None
    levels = free_level_sequences(n)
    if workers <= 1:
        best = _scan(levels, k, max_degree, tolerance)
    else:
        best = _Best(tolerance)
        jobs = ((chunk, k, max_degree, tolerance) for chunk in _chunks(levels, chunk_size))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_job, jobs):
                best.merge(part)
    by_code: dict[bytes, Tree] = {}
    for _, t in best.candidates:
        by_code.setdefault(canonical_code(t), t)
    codes = sorted(by_code)
    return BruteForceResult(
        minimum=best.value,
        argmin_codes=frozenset(codes),
        argmin_trees=tuple(by_code[c] for c in codes),
        class_size=best.count,
    )


@dataclass(frozen=True)
class VerificationReport:
    n: int
    k: int
    chemical: bool
    formula_value: float | None
    bruteforce_min: float
    argmin_codes: frozenset[CanonicalCode]
    tstar_codes: frozenset[CanonicalCode]
    tolerance: float
    passed: bool
    reason: str
    class_size: int = 0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def verify_theorem(
    n: int,
    k: int,
    chemical: bool = False,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
    allow_out_of_range: bool = False,
) -> VerificationReport:
    """Compare the brute-force minimum and argmin set against the closed form
    and the extremal family.

    Passes iff the minimum matches the formula within ``tolerance`` and the
    argmin classes are exactly the extremal family. Out-of-range pairs raise
    unless ``allow_out_of_range``, in which case the report is brute force only.
    """
    in_range = k in range(3, (n + 2) // 3 + 1)
    if not in_range and not allow_out_of_range:
        check_tstar_range(n, k)
    bf = min_abs_bruteforce(n, k, chemical=chemical, tolerance=tolerance, workers=workers)
    if not in_range:
        return VerificationReport(
            n, k, chemical, None, bf.minimum, bf.argmin_codes, frozenset(), tolerance,
            False, "formula not applicable: k outside 3..floor((n+2)/3)", bf.class_size,
        )
    formula = formula_min_abs(n, k)
    tstar = frozenset(canonical_code(t) for t in tstar_family(n, k))
    problems = []
    gap = abs(formula - bf.minimum)
    if gap > tolerance:
        problems.append(f"minimum differs from formula by {gap:.3e}")
    if bf.argmin_codes != tstar:
        extra = len(bf.argmin_codes - tstar)
        missing = len(tstar - bf.argmin_codes)
        problems.append(f"argmin set differs from extremal family ({extra} extra, {missing} missing)")
    return VerificationReport(
        n, k, chemical, formula, bf.minimum, bf.argmin_codes, tstar, tolerance,
        not problems, "; ".join(problems) or "ok", bf.class_size,
    )


def theorem_grid(n_min: int = 7, n_max: int = 14) -> list[tuple[int, int]]:
    return [(n, k) for n in range(n_min, n_max + 1) for k in range(3, (n + 2) // 3 + 1)]
