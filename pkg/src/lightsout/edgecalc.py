"""The edge-edit calculus: predicting how nullity and activation classes
change under star edits, typing edge additions, and searching for the
edits whose existence the calculus guarantees.

The prediction table covers eleven distinct outcomes.  Its rows are keyed
by the classes of the two sets plus one auxiliary class: the class of A2
relative to the complement of A1's characteristic vector when both sets
are solvable, or the class of the union when neither is.  Mirrored inputs
(the table is stated with the HO member second, the NO member first) are
handled by the cross-parity symmetry of the auxiliary class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import analysis
from .analysis import AO, HO, NO
from .errors import InputError, PreconditionError
from .gf2 import BitVector
from .graph import (
    Graph,
    StarSpec,
    enumerate_labeled_graphs,
    star_operation,
    toggle_edge,
)
from .reporting import CheckResult, SuiteReport

ClassTag = Literal["NO", "AO", "HO"]
AdditionType = Literal["Type1", "Type2", "Type3", "Type4", "Type5", "Type6", "Other"]

CROSS = "cross"
UNION = "union"
NONE = "none"


@dataclass(frozen=True)
class StarAux:
    """Auxiliary class feeding the prediction table.

    mode "cross": neither set is HO; cross_tag is the class of A2 relative
    to the complement of A1's characteristic vector.  mode "union": both
    sets are HO; union_tag is the class of their union relative to
    all-ones.  mode "none": exactly one set is HO; no auxiliary needed.
    """

    mode: str
    cross_tag: str | None = None
    union_tag: str | None = None


@dataclass(frozen=True)
class Prediction:
    delta_nu: int
    class_a1_after: str
    class_a2_after: str


@dataclass(frozen=True)
class StarReport:
    a1: tuple[int, ...]
    a2: tuple[int, ...]
    before_a1: str
    before_a2: str
    aux: StarAux
    predicted: Prediction
    nullity_before: int
    nullity_after: int
    actual_delta_nu: int
    after_a1: str
    after_a2: str
    agrees: bool

    def to_json_dict(self) -> dict:
        aux: dict = {"mode": self.aux.mode}
        if self.aux.cross_tag is not None:
            aux["cross_tag"] = self.aux.cross_tag
        if self.aux.union_tag is not None:
            aux["union_tag"] = self.aux.union_tag
        return {
            "a1": list(self.a1),
            "a2": list(self.a2),
            "before": {"a1": self.before_a1, "a2": self.before_a2, "aux": aux},
            "predicted": {
                "delta_nu": self.predicted.delta_nu,
                "a1_after": self.predicted.class_a1_after,
                "a2_after": self.predicted.class_a2_after,
            },
            "nullity_before": self.nullity_before,
            "nullity_after": self.nullity_after,
            "actual_delta_nu": self.actual_delta_nu,
            "after": {"a1": self.after_a1, "a2": self.after_a2},
            "agrees": self.agrees,
        }


@dataclass(frozen=True)
class EdgeEdit:
    action: str  # "add" | "remove"
    u: int
    v: int

    def to_json_dict(self) -> dict:
        return {"action": self.action, "edge": [self.u, self.v]}


@dataclass(frozen=True)
class ToggleReport:
    """What a single edge toggle does: the star analysis of two singletons."""

    action: str  # "add" | "remove"
    u: int
    v: int
    delta_nu: int
    nullity_before: int
    nullity_after: int
    before_u: str
    before_v: str
    after_u: str
    after_v: str
    addition_type: str | None

    def to_json_dict(self) -> dict:
        doc = {
            "action": self.action,
            "edge": [self.u, self.v],
            "delta_nu": self.delta_nu,
            "nullity_before": self.nullity_before,
            "nullity_after": self.nullity_after,
            "before": {"u": self.before_u, "v": self.before_v},
            "after": {"u": self.after_u, "v": self.after_v},
        }
        if self.addition_type is not None:
            doc["type_tag"] = self.addition_type
        return doc


@dataclass(frozen=True)
class CharacterizationWitness:
    """How an always solvable graph arises from a smaller always solvable
    one: kind A re-adds a single edge keeping nullity 0; kind B re-adds
    inner_edge (0 -> 1) and then edge (1 -> 0)."""

    kind: str  # "A" | "B"
    edge: tuple[int, int]
    type_tag: str
    inner_edge: tuple[int, int] | None = None
    inner_type_tag: str | None = None

    def to_json_dict(self) -> dict:
        doc: dict = {"kind": self.kind, "edge": list(self.edge), "type_tag": self.type_tag}
        if self.kind == "B":
            doc["inner_edge"] = list(self.inner_edge)
            doc["inner_type_tag"] = self.inner_type_tag
        return doc


# (a1, a2, aux tag) -> (delta nu, a1 after, a2 after).  The aux tag is the
# cross class for solvable/solvable rows, the union class for HO/HO rows,
# and None when exactly one side is HO.
_PREDICTIONS: dict[tuple[str, str, str | None], tuple[int, str, str]] = {
    (NO, NO, NO): (0, NO, NO),
    (NO, NO, AO): (2, HO, HO),
    (NO, AO, NO): (1, AO, HO),
    (NO, AO, AO): (0, NO, AO),
    (AO, NO, NO): (0, AO, NO),
    (AO, NO, AO): (1, HO, AO),
    (AO, AO, NO): (0, AO, AO),
    (AO, AO, AO): (1, HO, HO),
    (HO, HO, HO): (-2, NO, NO),
    (HO, HO, AO): (-1, AO, AO),
    (HO, HO, NO): (0, HO, HO),
    (NO, HO, None): (0, NO, HO),
    (AO, HO, None): (-1, NO, AO),
    (HO, NO, None): (0, HO, NO),
    (HO, AO, None): (-1, AO, NO),
}

_TAGS = (NO, AO, HO)


def predict_star(a1: str, a2: str, aux: StarAux) -> Prediction:
    """Look up the predicted nullity change and after-classes for a star
    edit between a set classified a1 and a set classified a2."""
    if a1 not in _TAGS or a2 not in _TAGS:
        raise InputError(f"classes must be NO/AO/HO, got ({a1!r}, {a2!r})")
    ho_count = (a1 == HO) + (a2 == HO)
    if ho_count == 0:
        if aux.mode != CROSS or aux.cross_tag not in (NO, AO):
            raise InputError(
                f"classes ({a1}, {a2}) need aux mode 'cross' with cross_tag NO/AO, got {aux}"
            )
        key = (a1, a2, aux.cross_tag)
    elif ho_count == 2:
        if aux.mode != UNION or aux.union_tag not in (NO, AO, HO):
            raise InputError(
                f"classes (HO, HO) need aux mode 'union' with union_tag NO/AO/HO, got {aux}"
            )
        key = (HO, HO, aux.union_tag)
    else:
        if aux.mode != NONE:
            raise InputError(f"classes ({a1}, {a2}) need aux mode 'none', got {aux}")
        key = (a1, a2, None)
    delta, c1, c2 = _PREDICTIONS[key]
    return Prediction(delta, c1, c2)


def star_aux(graph: Graph, spec: StarSpec, tag1: str, tag2: str) -> StarAux:
    """Compute the auxiliary class the prediction table needs."""
    if tag1 != HO and tag2 != HO:
        x_a1 = BitVector.from_support(graph.n, spec.a1)
        cross = analysis.classify_set(graph, spec.a2, x_a1.complement()).tag
        return StarAux(CROSS, cross_tag=cross)
    if tag1 == HO and tag2 == HO:
        union = analysis.classify_set(graph, spec.a1 | spec.a2).tag
        return StarAux(UNION, union_tag=union)
    return StarAux(NONE)


def analyze_star(graph: Graph, spec: StarSpec) -> StarReport:
    """Classify both sets, predict the star edit's effect, apply the edit,
    and compare against the recomputed ground truth."""
    spec.validate_for(graph)
    if not spec.a1 or not spec.a2:
        raise InputError("star analysis needs non-empty sets on both sides")
    tag1 = analysis.classify_set(graph, spec.a1).tag
    tag2 = analysis.classify_set(graph, spec.a2).tag
    aux = star_aux(graph, spec, tag1, tag2)
    predicted = predict_star(tag1, tag2, aux)

    nu_before = analysis.nullity(graph)
    edited = star_operation(graph, spec)
    nu_after = analysis.nullity(edited)
    after1 = analysis.classify_set(edited, spec.a1).tag
    after2 = analysis.classify_set(edited, spec.a2).tag
    agrees = (
        predicted.delta_nu == nu_after - nu_before
        and predicted.class_a1_after == after1
        and predicted.class_a2_after == after2
    )
    return StarReport(
        a1=tuple(sorted(spec.a1)),
        a2=tuple(sorted(spec.a2)),
        before_a1=tag1,
        before_a2=tag2,
        aux=aux,
        predicted=predicted,
        nullity_before=nu_before,
        nullity_after=nu_after,
        actual_delta_nu=nu_after - nu_before,
        after_a1=after1,
        after_a2=after2,
        agrees=agrees,
    )


def analyze_toggle(graph: Graph, u: int, v: int, strict_type6: bool = False) -> ToggleReport:
    """Star analysis of the singleton pair ({u}, {v}), reported as a plain
    edge toggle, with the addition typed when the edge is being added."""
    if u == v:
        raise InputError(f"cannot toggle a loop at vertex {u}")
    graph._check_vertex(u)
    graph._check_vertex(v)
    action = "remove" if graph.has_edge(u, v) else "add"
    addition_type = (
        classify_edge_addition(graph, u, v, strict_type6=strict_type6)
        if action == "add"
        else None
    )
    report = analyze_star(graph, StarSpec([u], [v]))
    return ToggleReport(
        action=action,
        u=u,
        v=v,
        delta_nu=report.actual_delta_nu,
        nullity_before=report.nullity_before,
        nullity_after=report.nullity_after,
        before_u=report.before_a1,
        before_v=report.before_a2,
        after_u=report.after_a1,
        after_v=report.after_a2,
        addition_type=addition_type,
    )


def find_nullity_decreasing_edge(graph: Graph) -> tuple[int, int]:
    """Lexicographically smallest edge whose removal decreases the nullity;
    one exists for every positive-nullity graph with an edge."""
    nu = analysis.nullity(graph)
    if nu == 0:
        raise PreconditionError("graph is always solvable; no removal can decrease nullity 0")
    edges = graph.edges()
    if not edges:
        raise PreconditionError("graph has no edges to remove")
    for u, v in edges:
        if analysis.nullity(toggle_edge(graph, u, v)) < nu:
            return (u, v)
    raise RuntimeError(
        f"internal failure: no nullity-decreasing edge in graph {graph.to_json_dict()}"
    )


def find_nullity_increasing_addition(graph: Graph) -> tuple[int, int] | None:
    """Lexicographically smallest non-edge whose addition increases the
    nullity, or None when no addition does."""
    if analysis.nullity(graph) != 0:
        raise PreconditionError("nullity-increasing addition search requires an always solvable graph")
    for u, v in graph.non_edges():
        if analysis.nullity(toggle_edge(graph, u, v)) > 0:
            return (u, v)
    return None


def find_delta_minus2_edit(graph: Graph) -> EdgeEdit:
    """An edit dropping the nullity by exactly 2: removals first, then
    additions, lexicographic within each."""
    nu = analysis.nullity(graph)
    if nu < 2:
        raise PreconditionError(f"nullity must be >= 2, got {nu}")
    for u, v in graph.edges():
        if analysis.nullity(toggle_edge(graph, u, v)) == nu - 2:
            return EdgeEdit("remove", u, v)
    for u, v in graph.non_edges():
        if analysis.nullity(toggle_edge(graph, u, v)) == nu - 2:
            return EdgeEdit("add", u, v)
    raise RuntimeError(
        f"internal failure: no edit drops the nullity by 2 in graph {graph.to_json_dict()}"
    )


def classify_edge_addition(graph: Graph, u: int, v: int, strict_type6: bool = False) -> str:
    """Type of the addition of the non-edge uv, by the endpoint classes and
    the class of the second endpoint relative to the complement of the
    first one's characteristic vector.

    Types 1/3 expect a (NO, AO) endpoint pair, types 2/4 an (AO, AO) pair,
    type 5 an (AO, HO) pair; arguments are swapped when they match the
    roles in the opposite order.  Type 6 takes two HO endpoints whose pair
    set is AO; with strict_type6 the pair set is required to be HO instead.
    """
    if u == v:
        raise InputError(f"edge endpoints must differ, got {u} twice")
    if graph.has_edge(u, v):
        raise InputError(f"vertices {u} and {v} are already adjacent")
    tag_u = analysis.classify_set(graph, [u]).tag
    tag_v = analysis.classify_set(graph, [v]).tag

    if {tag_u, tag_v} == {NO, AO}:
        if tag_u == AO:
            u, v = v, u
        cond = _class_relative_to_complement(graph, u, v)
        return "Type1" if cond == AO else "Type3"
    if tag_u == AO and tag_v == AO:
        cond = _class_relative_to_complement(graph, u, v)
        return "Type2" if cond == NO else "Type4"
    if {tag_u, tag_v} == {AO, HO}:
        return "Type5"
    if tag_u == HO and tag_v == HO:
        pair = analysis.classify_set(graph, [u, v]).tag
        wanted = HO if strict_type6 else AO
        return "Type6" if pair == wanted else "Other"
    return "Other"


def _class_relative_to_complement(graph: Graph, u: int, v: int) -> str:
    x_u = BitVector.from_support(graph.n, [u])
    return analysis.classify_set(graph, [v], x_u.complement()).tag


def verify_characterization(graph: Graph, strict_type6: bool = False) -> CharacterizationWitness:
    """A witness that the always solvable graph is built by re-adding one
    edge of a matching type (kind A), or an inner then outer edge (kind B).
    Searched in lexicographic edge order."""
    if analysis.nullity(graph) != 0:
        raise PreconditionError("characterization applies to always solvable graphs")
    edges = graph.edges()
    if not edges:
        raise PreconditionError("characterization applies to graphs with at least one edge")
    for u, v in edges:
        stripped = toggle_edge(graph, u, v)
        if analysis.nullity(stripped) != 0:
            continue
        tag = classify_edge_addition(stripped, u, v, strict_type6=strict_type6)
        if tag in ("Type1", "Type2"):
            return CharacterizationWitness("A", (u, v), tag)
    for u, v in edges:
        stripped = toggle_edge(graph, u, v)
        if analysis.nullity(stripped) != 1:
            continue
        outer_tag = classify_edge_addition(stripped, u, v, strict_type6=strict_type6)
        if outer_tag not in ("Type5", "Type6"):
            continue
        for x, y in stripped.edges():
            inner = toggle_edge(stripped, x, y)
            if analysis.nullity(inner) != 0:
                continue
            inner_tag = classify_edge_addition(inner, x, y, strict_type6=strict_type6)
            if inner_tag in ("Type3", "Type4"):
                return CharacterizationWitness("B", (u, v), outer_tag, (x, y), inner_tag)
    raise RuntimeError(
        f"internal failure: no characterization witness for graph {graph.to_json_dict()}"
    )


def replay_witness(graph: Graph, witness: CharacterizationWitness) -> bool:
    """Re-run the witness's additions and confirm the claimed nullity
    trajectory ends at the original graph."""
    u, v = witness.edge
    if not graph.has_edge(u, v):
        return False
    stripped = toggle_edge(graph, u, v)
    if witness.kind == "A":
        return (
            analysis.nullity(stripped) == 0
            and witness.type_tag in ("Type1", "Type2")
            and analysis.nullity(graph) == 0
        )
    if witness.kind != "B" or witness.inner_edge is None:
        return False
    x, y = witness.inner_edge
    if not stripped.has_edge(x, y):
        return False
    base = toggle_edge(stripped, x, y)
    return (
        analysis.nullity(base) == 0
        and witness.inner_type_tag in ("Type3", "Type4")
        and analysis.nullity(stripped) == 1
        and witness.type_tag in ("Type5", "Type6")
        and analysis.nullity(graph) == 0
    )


def check_degree_parity(graph: Graph) -> str:
    """For an always solvable graph: 'hypothesis_failed' when some edge
    removal keeps the nullity 0; otherwise 'verified' when every AO vertex
    has even degree and every NO vertex odd degree, else 'violated'."""
    if analysis.nullity(graph) != 0:
        raise PreconditionError("degree parity check requires an always solvable graph")
    for u, v in graph.edges():
        if analysis.nullity(toggle_edge(graph, u, v)) == 0:
            return "hypothesis_failed"
    for v, cls in enumerate(analysis.classify_vertices(graph)):
        want_even = cls.tag == AO
        if (graph.degree(v) % 2 == 0) != want_even:
            return "violated"
    return "verified"


def check_parity_lemma(graph: Graph, u: int) -> bool:
    """For an always solvable graph, the dot product of the complement of
    u's closed neighborhood with the pattern solving the complement of
    x_{u} equals the parity of the odd dominating pattern when u is NO,
    and its flip when u is AO."""
    if analysis.nullity(graph) != 0:
        raise PreconditionError("parity identity is stated for always solvable graphs")
    graph._check_vertex(u)
    x_u = BitVector.from_support(graph.n, [u])
    solution = analysis.solve_configuration(graph, x_u.complement())
    assert solution is not None  # always solvable
    p = solution.particular
    s = analysis.odd_dominating_patterns(graph).particular
    value = graph.closed_neighborhood(u).complement().dot(p)
    pr_s = s.weight() & 1
    if analysis.classify_set(graph, [u]).tag == NO:
        return value == pr_s
    return value == 1 - pr_s


# -- exhaustive sweeps ---------------------------------------------------

def _disjoint_nonempty_pairs(n: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    subsets = [frozenset(v for v in range(n) if (m >> v) & 1) for m in range(1, 1 << n)]
    return [
        (a, b)
        for a in subsets
        for b in subsets
        if not a & b
    ]


def verify_star_table(max_n: int) -> SuiteReport:
    """Check every star edit prediction on every labeled graph up to
    max_n vertices, over all ordered disjoint non-empty set pairs."""
    report = SuiteReport(max_n=max_n)
    agree = CheckResult("star_table_agreement")
    report.checks.append(agree)
    for n in range(1, max_n + 1):
        specs = [StarSpec(a, b) for a, b in _disjoint_nonempty_pairs(n)]
        for k, graph in enumerate(enumerate_labeled_graphs(n)):
            for spec in specs:
                result = analyze_star(graph, spec)
                agree.record(
                    result.agrees,
                    n,
                    k,
                    details=f"a1={sorted(spec.a1)} a2={sorted(spec.a2)} report={result.to_json_dict()}",
                )
    return report


def verify_theorem_suite(max_n: int) -> SuiteReport:
    """Sweep all labeled graphs up to max_n vertices and check every
    existence and parity claim of the edit calculus."""
    report = SuiteReport(max_n=max_n)
    removal = CheckResult("removal_decreases_nullity")
    addition = CheckResult("addition_increases_nullity")
    drop_two = CheckResult("drop_two_edit_exists")
    degree_parity = CheckResult("degree_parity")
    characterization = CheckResult("characterization_witness")
    type_deltas = CheckResult("addition_type_deltas")
    parity_identity = CheckResult("parity_identity")
    report.checks.extend(
        [removal, addition, drop_two, degree_parity, characterization, type_deltas, parity_identity]
    )

    for n in range(1, max_n + 1):
        for k, graph in enumerate(enumerate_labeled_graphs(n)):
            nu = analysis.nullity(graph)
            has_edges = graph.edge_count() > 0

            if nu > 0 and has_edges:
                try:
                    u, v = find_nullity_decreasing_edge(graph)
                    ok = analysis.nullity(toggle_edge(graph, u, v)) < nu
                except RuntimeError:
                    ok = False
                removal.record(ok, n, k)

            if nu == 0 and not (graph.is_even_graph() and n % 2 == 1):
                pair = find_nullity_increasing_addition(graph)
                ok = pair is not None and analysis.nullity(toggle_edge(graph, *pair)) > 0
                addition.record(ok, n, k)

            if nu >= 2:
                try:
                    edit = find_delta_minus2_edit(graph)
                    ok = analysis.nullity(toggle_edge(graph, edit.u, edit.v)) == nu - 2
                except RuntimeError:
                    ok = False
                drop_two.record(ok, n, k)

            if nu == 0:
                degree_parity.record(check_degree_parity(graph) != "violated", n, k)
                for v in range(n):
                    parity_identity.record(check_parity_lemma(graph, v), n, k, details=f"vertex {v}")

            if nu == 0 and has_edges:
                try:
                    witness = verify_characterization(graph)
                    ok = replay_witness(graph, witness)
                except RuntimeError:
                    ok = False
                characterization.record(ok, n, k)

            for u, v in graph.non_edges():
                tag = classify_edge_addition(graph, u, v)
                if tag == "Other":
                    continue
                delta = analysis.nullity(toggle_edge(graph, u, v)) - nu
                expected = {"Type1": 0, "Type2": 0, "Type3": 1, "Type4": 1, "Type5": -1, "Type6": -1}[tag]
                type_deltas.record(delta == expected, n, k, details=f"({u},{v}) {tag} delta {delta}")
    return report
