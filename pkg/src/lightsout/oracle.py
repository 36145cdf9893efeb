"""Brute-force re-derivations used to validate the elimination fast paths.

Everything here works by enumerating all 2^n activation patterns and
multiplying them through the closed neighborhood rows directly; no row
reduction is involved, so agreement with the fast path is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import analysis, gf2
from .analysis import AO, HO, NO, ActivationClass
from .errors import CapacityError, InputError
from .gf2 import BitVector
from .graph import Graph, closed_neighborhood_matrix, enumerate_labeled_graphs
from .reporting import CheckResult, SuiteReport

ORACLE_VERTEX_LIMIT = 22
LEMMA_SWEEP_LIMIT = 6


@dataclass(frozen=True)
class PatternPartitionCounts:
    """How the solving patterns for a configuration split on two sets:
    o-counts have dot product 0 with the set, i-counts have 1."""

    total: int
    o1_o2: int
    i1_i2: int
    o1: int
    i1: int


def _neighborhood_rows(graph: Graph) -> list[int]:
    return [graph.adj[u] | (1 << u) for u in range(graph.n)]


def _apply(rows: list[int], pattern: int) -> int:
    out = 0
    for i, row in enumerate(rows):
        out |= ((row & pattern).bit_count() & 1) << i
    return out


def _check_size(graph: Graph) -> None:
    if graph.n > ORACLE_VERTEX_LIMIT:
        raise CapacityError(
            f"brute enumeration is limited to {ORACLE_VERTEX_LIMIT} vertices, got {graph.n}"
        )


def brute_kernel(graph: Graph) -> set[BitVector]:
    """All null patterns, by checking every one of the 2^n candidates."""
    _check_size(graph)
    rows = _neighborhood_rows(graph)
    return {
        BitVector(graph.n, p)
        for p in range(1 << graph.n)
        if _apply(rows, p) == 0
    }


def brute_solutions(graph: Graph, config: BitVector) -> list[BitVector]:
    """All solving patterns for a configuration, by full enumeration."""
    _check_size(graph)
    if config.n != graph.n:
        raise InputError(f"configuration length {config.n} does not match n={graph.n}")
    rows = _neighborhood_rows(graph)
    return [
        BitVector(graph.n, p)
        for p in range(1 << graph.n)
        if _apply(rows, p) == config.mask
    ]


def _tag_from_tally(ones: int, total: int) -> str | None:
    if ones == 0:
        return NO
    if ones == total:
        return AO
    if 2 * ones == total:
        return HO
    return None


def brute_classify_set(
    graph: Graph, vertex_set: Iterable[int], config: BitVector | None = None
) -> ActivationClass:
    """Classify by literally tallying the dot product over every solving
    pattern: all 0 is NO, all 1 is AO, an exact half split is HO."""
    _check_size(graph)
    a_mask = BitVector.from_support(graph.n, vertex_set).mask
    if config is None:
        config = BitVector.ones(graph.n)
    patterns = brute_solutions(graph, config)
    if not patterns:
        raise InputError(
            f"classification relative to unsolvable configuration {config.to01()}"
        )
    ones = sum((a_mask & p.mask).bit_count() & 1 for p in patterns)
    tag = _tag_from_tally(ones, len(patterns))
    if tag is None:
        raise RuntimeError(
            f"internal failure: tally {ones}/{len(patterns)} is neither none, all, nor half"
        )
    return ActivationClass(tag, config)


def partition_counts(
    graph: Graph, config: BitVector, a1: Iterable[int], a2: Iterable[int]
) -> PatternPartitionCounts:
    """Exact intersection counts over all solving patterns for two disjoint
    half odd activated sets."""
    _check_size(graph)
    m1 = BitVector.from_support(graph.n, a1).mask
    m2 = BitVector.from_support(graph.n, a2).mask
    if m1 & m2:
        raise InputError("sets must be disjoint")
    patterns = brute_solutions(graph, config)
    if not patterns:
        raise InputError(f"configuration {config.to01()} is unsolvable")
    total = len(patterns)
    t1 = sum((m1 & p.mask).bit_count() & 1 for p in patterns)
    t2 = sum((m2 & p.mask).bit_count() & 1 for p in patterns)
    if _tag_from_tally(t1, total) != HO or _tag_from_tally(t2, total) != HO:
        raise InputError("partition counts require both sets to be half odd activated")
    o1_o2 = i1_i2 = 0
    for p in patterns:
        d1 = (m1 & p.mask).bit_count() & 1
        d2 = (m2 & p.mask).bit_count() & 1
        if d1 == 0 and d2 == 0:
            o1_o2 += 1
        elif d1 == 1 and d2 == 1:
            i1_i2 += 1
    return PatternPartitionCounts(
        total=total, o1_o2=o1_o2, i1_i2=i1_i2, o1=total - t1, i1=t1
    )


# -- the lemma sweep -----------------------------------------------------

def verify_lemma_suite(max_n: int) -> SuiteReport:
    """Check the solvability observations and the activation-class lemmas
    on every labeled graph with at most max_n vertices, entirely by
    pattern enumeration (plus one fast-vs-brute kernel comparison)."""
    if max_n > LEMMA_SWEEP_LIMIT:
        raise CapacityError(
            f"lemma sweep is limited to {LEMMA_SWEEP_LIMIT} vertices, got max_n={max_n}"
        )
    if max_n < 1:
        raise InputError(f"max_n must be >= 1, got {max_n}")
    report = SuiteReport(max_n=max_n)
    o1 = CheckResult("always_solvable_iff_trivial_kernel")
    o2 = CheckResult("solution_count_is_kernel_size")
    o3 = CheckResult("solvable_iff_orthogonal_to_kernel")
    half = CheckResult("half_of_null_patterns_hit")
    complement = CheckResult("complement_preserves_solvability")
    self_orth = CheckResult("solving_pattern_self_orthogonal")
    transfer = CheckResult("class_transfers_to_own_configuration")
    cross = CheckResult("cross_parity_of_disjoint_sets")
    counting = CheckResult("intersection_counts_match_union_class")
    kernel_eq = CheckResult("elimination_matches_brute_kernel")
    nbhd_parity = CheckResult("neighborhood_complement_parity")
    report.checks.extend(
        [o1, o2, o3, half, complement, self_orth, transfer, cross, counting, kernel_eq, nbhd_parity]
    )

    for n in range(1, max_n + 1):
        full = (1 << n) - 1
        size = 1 << n
        for k, graph in enumerate(enumerate_labeled_graphs(n)):
            rows = _neighborhood_rows(graph)
            solutions: dict[int, list[int]] = {}
            for p in range(size):
                solutions.setdefault(_apply(rows, p), []).append(p)
            kernel = solutions[0]
            kernel_size = len(kernel)

            ok = (len(solutions) == size) == (kernel_size == 1)
            o1.record(ok, n, k)

            ok = all(len(ps) == kernel_size for ps in solutions.values())
            o2.record(ok, n, k)

            bad = None
            for c in range(size):
                orthogonal = all((c & ell).bit_count() & 1 == 0 for ell in kernel)
                if (c in solutions) != orthogonal:
                    bad = c
                    break
            o3.record(bad is None, n, k, details=f"config {bad}")

            bad = None
            for x in range(size):
                hits = sum((x & ell).bit_count() & 1 for ell in kernel)
                if hits and 2 * hits != kernel_size:
                    bad = x
                    break
            half.record(bad is None, n, k, details=f"vector {bad}")

            ok = all((x in solutions) == ((x ^ full) in solutions) for x in range(size))
            complement.record(ok, n, k)

            bad = None
            for x in solutions:
                if any((x & p).bit_count() & 1 for p in solutions.get(x ^ full, ())):
                    bad = x
                    break
            self_orth.record(bad is None, n, k, details=f"config {bad}")

            ones_patterns = solutions[full]
            tag_rel_ones = {
                a: _tag_from_tally(
                    sum((a & p).bit_count() & 1 for p in ones_patterns), kernel_size
                )
                for a in range(size)
            }

            bad = None
            for a in solutions:
                own = _tag_from_tally(
                    sum((a & p).bit_count() & 1 for p in solutions[a]), kernel_size
                )
                if tag_rel_ones[a] != own:
                    bad = a
                    break
            if solutions:
                transfer.record(bad is None, n, k, details=f"set {bad}")

            solvable_nonempty = [a for a in solutions if a]
            pairs = [
                (a, b)
                for a in solvable_nonempty
                for b in solvable_nonempty
                if not a & b
            ]
            if pairs:
                bad = None
                for a1_mask, a2_mask in pairs:
                    t1, t2 = tag_rel_ones[a1_mask], tag_rel_ones[a2_mask]
                    sols_comp_a1 = solutions[a1_mask ^ full]
                    sols_comp_a2 = solutions[a2_mask ^ full]
                    a1_rel = _tag_from_tally(
                        sum((a1_mask & p).bit_count() & 1 for p in sols_comp_a2), kernel_size
                    )
                    a2_rel = _tag_from_tally(
                        sum((a2_mask & p).bit_count() & 1 for p in sols_comp_a1), kernel_size
                    )
                    if t1 == t2:
                        ok = (a1_rel == NO) == (a2_rel == NO)
                    elif t1 == AO and t2 == NO:
                        ok = (a1_rel == NO) == (a2_rel == AO)
                    else:  # t1 == NO, t2 == AO: apply the mixed case with roles swapped
                        ok = (a2_rel == NO) == (a1_rel == AO)
                    if not ok:
                        bad = (a1_mask, a2_mask)
                        break
                cross.record(bad is None, n, k, details=f"pair {bad}")

            ho_masks = [
                a for a in range(1, size) if a not in solutions
            ]
            ho_pairs = [
                (a, b) for a in ho_masks for b in ho_masks if not a & b
            ]
            if ho_pairs:
                bad = None
                for a1_mask, a2_mask in ho_pairs:
                    union = a1_mask | a2_mask
                    for c, patterns in solutions.items():
                        o1o2 = i1i2 = 0
                        for p in patterns:
                            d1 = (a1_mask & p).bit_count() & 1
                            d2 = (a2_mask & p).bit_count() & 1
                            if d1 == d2:
                                if d1:
                                    i1i2 += 1
                                else:
                                    o1o2 += 1
                        union_tag = _tag_from_tally(
                            sum((union & p).bit_count() & 1 for p in patterns),
                            kernel_size,
                        )
                        if union_tag == NO:
                            count_ok = 2 * o1o2 == kernel_size
                        elif union_tag == HO:
                            count_ok = 4 * o1o2 == kernel_size
                        elif union_tag == AO:
                            count_ok = o1o2 == 0
                        else:
                            count_ok = False
                        if o1o2 != i1i2 or not count_ok:
                            bad = (a1_mask, a2_mask, c)
                            break
                    if bad:
                        break
                counting.record(bad is None, n, k, details=f"case {bad}")

            fast_basis = gf2.kernel_basis(closed_neighborhood_matrix(graph))
            span = {0}
            for vec in fast_basis:
                span |= {s ^ vec.mask for s in span}
            kernel_eq.record(span == set(kernel), n, k)

            if kernel_size == 1:
                s = ones_patterns[0]
                pr_s = s.bit_count() & 1
                bad = None
                for u in range(n):
                    p = solutions[full ^ (1 << u)][0]
                    value = ((full ^ rows[u]) & p).bit_count() & 1
                    if (s >> u) & 1:  # always activated
                        ok = value == 1 - pr_s
                    else:
                        ok = value == pr_s
                    if not ok:
                        bad = u
                        break
                nbhd_parity.record(bad is None, n, k, details=f"vertex {bad}")
    return report
