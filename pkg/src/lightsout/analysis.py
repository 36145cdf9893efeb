"""Lights Out semantics on a graph: nullity, solvability, odd dominating
patterns, and activation classification of vertices and sets.

A set A is classified relative to a solvable configuration c by the dot
product of its characteristic vector with the solving patterns for c:
never 1 (NO), always 1 (AO), or 1 for exactly half of them (HO).  HO is
equivalent to A itself being unsolvable as a configuration, so the verdict
is decided by kernel orthogonality plus a single sample pattern instead of
enumerating the whole coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InputError
from .gf2 import AffineSolutionSet, BitVector, _reduce
from .graph import Graph, closed_neighborhood_matrix

NO = "NO"
AO = "AO"
HO = "HO"


@dataclass(frozen=True)
class ActivationClass:
    """NO/AO/HO verdict for a vertex set, relative to a configuration."""

    tag: str
    relative_to: BitVector


@dataclass(frozen=True)
class AnalysisSummary:
    nullity: int
    always_solvable: bool
    vertex_classes: tuple[ActivationClass, ...]
    odd_dominating: AffineSolutionSet


class _System:
    """Cached row reduction of the closed neighborhood matrix, augmented
    with the identity so any right-hand side can be solved in O(n) dots."""

    __slots__ = ("n", "kernel", "kernel_masks", "pivot_ops", "ones_mask", "_ones_solution")

    def __init__(self, graph: Graph):
        n = graph.n
        nbhd = closed_neighborhood_matrix(graph)
        rows = [mask | (1 << (n + i)) for i, mask in enumerate(nbhd.row_masks)]
        work, pivots = _reduce(rows, n)
        low = (1 << n) - 1
        self.n = n
        # pivot_ops[col] = mask of original rows combined into the pivot row
        self.pivot_ops = tuple((col, work[row] >> n) for col, row in pivots)
        pivot_cols = {c for c, _ in pivots}
        kernel = []
        for free in range(n):
            if free in pivot_cols:
                continue
            vec = 1 << free
            for col, row in pivots:
                if (work[row] >> free) & 1:
                    vec |= 1 << col
            kernel.append(vec)
        self.kernel_masks = tuple(kernel)
        self.kernel = tuple(BitVector(n, m) for m in kernel)
        self.ones_mask = low
        self._ones_solution: int | None = None

    @property
    def nullity(self) -> int:
        return len(self.kernel_masks)

    def solvable(self, c_mask: int) -> bool:
        return all((k & c_mask).bit_count() & 1 == 0 for k in self.kernel_masks)

    def solve(self, c_mask: int) -> int | None:
        """Particular solution mask with free variables 0, or None."""
        if not self.solvable(c_mask):
            return None
        out = 0
        for col, ops in self.pivot_ops:
            if (ops & c_mask).bit_count() & 1:
                out |= 1 << col
        return out

    def ones_solution(self) -> int:
        if self._ones_solution is None:
            sol = self.solve(self.ones_mask)
            if sol is None:
                raise RuntimeError(
                    "internal failure: the all-ones configuration has no solving "
                    "pattern, contradicting odd dominating pattern existence"
                )
            self._ones_solution = sol
        return self._ones_solution


@lru_cache(maxsize=1 << 14)
def _system(graph: Graph) -> _System:
    return _System(graph)


def nullity(graph: Graph) -> int:
    """Dimension of the kernel of the closed neighborhood matrix."""
    return _system(graph).nullity


def is_always_solvable(graph: Graph) -> bool:
    return _system(graph).nullity == 0


def solve_configuration(graph: Graph, config: BitVector) -> AffineSolutionSet | None:
    """The full family of activation patterns turning `config` all-off,
    or None when the configuration is unsolvable."""
    if config.n != graph.n:
        raise InputError(f"configuration length {config.n} does not match n={graph.n}")
    sys = _system(graph)
    particular = sys.solve(config.mask)
    if particular is None:
        return None
    return AffineSolutionSet(BitVector(graph.n, particular), sys.kernel)


def odd_dominating_patterns(graph: Graph) -> AffineSolutionSet:
    """Solutions of the all-ones configuration; non-empty for every graph."""
    sys = _system(graph)
    return AffineSolutionSet(BitVector(graph.n, sys.ones_solution()), sys.kernel)


def unsolvability_certificate(graph: Graph, config: BitVector) -> BitVector | None:
    """A null pattern not orthogonal to `config`, or None when solvable."""
    if config.n != graph.n:
        raise InputError(f"configuration length {config.n} does not match n={graph.n}")
    for k in _system(graph).kernel:
        if (k.mask & config.mask).bit_count() & 1:
            return k
    return None


def classify_set(
    graph: Graph, vertex_set: Iterable[int], config: BitVector | None = None
) -> ActivationClass:
    """Classify a vertex set relative to a solvable configuration
    (all-ones when omitted)."""
    sys = _system(graph)
    a_mask = 0
    for v in vertex_set:
        if not 0 <= v < graph.n:
            raise InputError(f"vertex {v} out of range for n={graph.n}")
        a_mask |= 1 << v
    if config is None:
        config = BitVector.ones(graph.n)
    elif config.n != graph.n:
        raise InputError(f"configuration length {config.n} does not match n={graph.n}")
    c_solution = sys.ones_solution() if config.mask == sys.ones_mask else sys.solve(config.mask)
    if c_solution is None:
        raise InputError(
            f"classification relative to unsolvable configuration {config.to01()}"
        )
    tag = _classify_mask(sys, a_mask, c_solution)
    return ActivationClass(tag, config)


def _classify_mask(sys: _System, a_mask: int, c_solution: int) -> str:
    if not sys.solvable(a_mask):
        return HO
    return AO if (a_mask & c_solution).bit_count() & 1 else NO


def classify_vertices(graph: Graph) -> list[ActivationClass]:
    """Per-vertex classes relative to the all-ones configuration."""
    sys = _system(graph)
    ones = BitVector.ones(graph.n)
    sol = sys.ones_solution()
    return [
        ActivationClass(_classify_mask(sys, 1 << v, sol), ones) for v in range(graph.n)
    ]


def summarize(graph: Graph) -> AnalysisSummary:
    return AnalysisSummary(
        nullity=nullity(graph),
        always_solvable=is_always_solvable(graph),
        vertex_classes=tuple(classify_vertices(graph)),
        odd_dominating=odd_dominating_patterns(graph),
    )
