"""Sharpness families, theorem checks on concrete graphs, and a random hunt.

Three sufficient conditions are checked here. With ``kappa`` the vertex
connectivity and n, r >= 0, a graph with ``kappa >= n + r + 2`` is
(P>=k, n)-factor critical avoidable when

* theorem 6 (k=2): ``I(G) > (n + r + 3) / (2(r + 2))``
* theorem 7 (k=3): ``t(G) > (n + r + 2) / (2(r + 2))``
* theorem 8 (k=3): ``I(G) > (n + 3(r + 2)) / (2(r + 2))``

Remarks 1-6 are join constructions showing each threshold and each
connectivity requirement cannot be relaxed.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterator, Optional

from .expr import parse_construction
from .factors import (
    Certificate,
    certificate_value,
    is_critical_avoidable,
    residual_graph,
    validate_certificate,
    violating_sets,
)
from .formats import emit_graph6
from .graph import Edge, Graph, VertexSet, build_graph, components, induced_subgraph, relabel
from .params import connectivity, isolated_toughness, toughness

DESK_MAX_ORDER = 12
EDGE_PROBABILITIES = (0.3, 0.5, 0.7, 0.9)


@dataclass(frozen=True)
class Theorem:
    number: int
    k: int
    parameter: str
    threshold: Callable[[int, int], Fraction]
    remarks: tuple[int, int]


THEOREMS = {
    6: Theorem(6, 2, "I", lambda n, r: Fraction(n + r + 3, 2 * (r + 2)), (1, 2)),
    7: Theorem(7, 3, "t", lambda n, r: Fraction(n + r + 2, 2 * (r + 2)), (3, 4)),
    8: Theorem(8, 3, "I", lambda n, r: Fraction(n + 3 * (r + 2), 2 * (r + 2)), (5, 6)),
}


def parameter_of(g: Graph, name: str):
    return isolated_toughness(g) if name == "I" else toughness(g)


@dataclass(frozen=True)
class _Family:
    theorem: int
    clique: Callable[[int, int], int]
    rest: Callable[[int, int], str]
    # G - W - e - X as printed next to the construction
    stated_remainder: Callable[[int, int], str]
    expected_parameter: Callable[[int, int], Fraction]
    expected_connectivity: Callable[[int, int], int]
    criterion: Callable[[int], int]
    bound: Callable[[int], int]
    relation: str
    valid: Callable[[int, int], bool]
    constraint: str


_FAMILIES = {
    1: _Family(6, lambda n, r: n + r + 2, lambda n, r: f"{2 * r + 3}*K1|K2",
               lambda n, r: f"{2 * r + 5}*K1",
               lambda n, r: Fraction(n + r + 3, 2 * (r + 2)), lambda n, r: n + r + 2,
               lambda r: 2 * r + 5, lambda r: 2 * (r + 2), "=",
               lambda n, r: n >= r + 1, "n >= r + 1"),
    2: _Family(6, lambda n, r: n + r + 1, lambda n, r: f"{2 * r + 1}*K1|K2",
               lambda n, r: f"{2 * r + 3}*K1",
               lambda n, r: Fraction(n + r + 2, 2 * r + 2), lambda n, r: n + r + 1,
               lambda r: 2 * r + 3, lambda r: 2 * (r + 1), ">",
               lambda n, r: n >= r, "n >= r"),
    3: _Family(7, lambda n, r: n + r + 2, lambda n, r: f"{2 * r + 3}*K1|K2",
               lambda n, r: f"{2 * r + 5}*K1",
               lambda n, r: Fraction(n + r + 2, 2 * (r + 2)), lambda n, r: n + r + 2,
               lambda r: 2 * r + 5, lambda r: 2 * (r + 2), "=",
               lambda n, r: True, "none"),
    4: _Family(7, lambda n, r: n + r + 1, lambda n, r: f"{2 * r + 1}*K1|K2",
               lambda n, r: f"{2 * r + 3}*K1",
               lambda n, r: Fraction(n + r + 1, 2 * r + 2), lambda n, r: n + r + 1,
               lambda r: 2 * r + 3, lambda r: 2 * (r + 1), ">",
               lambda n, r: n >= 1, "n >= 1"),
    5: _Family(8, lambda n, r: n + r + 2, lambda n, r: f"{2 * r + 4}*K2",
               lambda n, r: f"{2 * r + 3}*K2|2*K1",
               lambda n, r: Fraction(n + 3 * (r + 2), 2 * (r + 2)), lambda n, r: n + r + 2,
               lambda r: 2 * r + 5, lambda r: 2 * (r + 2), "=",
               lambda n, r: True, "none"),
    # printed as (2r+1)K1 u (2K1); recomputed structurally in verify_sharpness
    6: _Family(8, lambda n, r: n + r + 1, lambda n, r: f"{2 * r + 2}*K2",
               lambda n, r: f"{2 * r + 1}*K1|2*K1",
               lambda n, r: Fraction(n + 3 * (r + 1), 2 * (r + 1)), lambda n, r: n + r + 1,
               lambda r: 2 * r + 3, lambda r: 2 * (r + 1), ">",
               lambda n, r: n >= 1, "n >= 1"),
}


@dataclass(frozen=True)
class RemarkInstance:
    """A sharpness construction with the values it is expected to have."""

    remark: int
    n: int
    r: int
    expression: str
    graph: Graph
    theorem: int
    k: int
    parameter: str
    expected_parameter: Fraction
    expected_connectivity: int
    # W, e and X of the violating certificate described alongside the construction
    W: VertexSet
    e: Edge
    X: VertexSet
    expected_criterion: int
    expected_bound: int
    stated_remainder: str


def build_remark_graph(remark: int, n: int, r: int) -> RemarkInstance:
    """The remark's join construction; the clique gets the lowest labels."""
    if remark not in _FAMILIES:
        raise ValueError(f"unknown remark {remark}")
    fam = _FAMILIES[remark]
    if n < 0 or r < 0 or not fam.valid(n, r):
        raise ValueError(f"remark {remark} requires n, r >= 0 and {fam.constraint}; got n={n}, r={r}")
    m = fam.clique(n, r)
    expression = f"K{m}+({fam.rest(n, r)})"
    g = parse_construction(expression)
    # remarks 1-4 have a single K2, placed last; remarks 5-6 use the first K2
    e = (g.order - 2, g.order - 1) if remark <= 4 else (m, m + 1)
    theorem = THEOREMS[fam.theorem]
    return RemarkInstance(
        remark, n, r, expression, g, theorem.number, theorem.k, theorem.parameter,
        fam.expected_parameter(n, r), fam.expected_connectivity(n, r),
        tuple(range(n)), e, tuple(range(n, m)),
        fam.criterion(r), fam.bound(r), fam.stated_remainder(n, r))


def sharpness_grid(max_order: int = 16) -> Iterator[tuple[int, int, int]]:
    """(remark, n, r) with n <= 3, r <= 2, the remark's constraint, and order <= max_order."""
    for remark, fam in _FAMILIES.items():
        for n in range(4):
            for r in range(3):
                if fam.valid(n, r) and build_remark_graph(remark, n, r).graph.order <= max_order:
                    yield remark, n, r


def describe_components(g: Graph) -> str:
    """Component multiset as a construction expression, e.g. ``2*K1|3*K2``."""
    counts: Counter = Counter()
    for comp in components(g):
        h = induced_subgraph(g, comp)
        if h.is_complete():
            name = f"K{h.order}"
        else:
            name = f"[{emit_graph6(h)}]"
        counts[(h.order, name)] += 1
    parts = []
    for (_, name), count in sorted(counts.items()):
        parts.append(name if count == 1 else f"{count}*{name}")
    return "|".join(parts)


@dataclass
class VerificationReport:
    """Outcome of checking one instance.

    ``verdict`` is ``"COUNTEREXAMPLE"`` exactly when the hypothesis holds and
    the conclusion does not, ``"vacuous"`` when the hypothesis fails, and
    ``"consistent"`` otherwise.
    """

    instance: str
    graph6: str
    hypothesis_holds: bool
    conclusion_holds: Optional[bool]
    verdict: str
    checks: dict[str, Any] = field(default_factory=dict)
    certificate: Optional[Certificate] = None


def _verdict(hypothesis: bool, conclusion: Optional[bool]) -> str:
    if not hypothesis:
        return "vacuous"
    return "COUNTEREXAMPLE" if conclusion is False else "consistent"


def verify_sharpness(remark: int, n: int, r: int) -> VerificationReport:
    """Recompute a remark construction and confirm that it fails as claimed.

    The instance counts as consistent when connectivity and the parameter
    equal their closed forms exactly, the parameter sits on the stated side
    of the theorem threshold, the critical-avoidability decider says no with
    a valid certificate, and the certificate built from the construction
    (W in the clique, e in a K2, X the rest of the clique) reproduces the
    stated criterion and bound.
    """
    inst = build_remark_graph(remark, n, r)
    g = inst.graph
    theorem = THEOREMS[inst.theorem]
    fam = _FAMILIES[remark]
    checks: dict[str, Any] = {}

    kappa = connectivity(g)
    checks["connectivity"] = {"value": kappa, "expected": inst.expected_connectivity,
                              "ok": kappa == inst.expected_connectivity}
    value = parameter_of(g, inst.parameter).value
    checks[inst.parameter] = {"value": value, "expected": inst.expected_parameter,
                              "ok": value == inst.expected_parameter}
    threshold = theorem.threshold(n, r)
    side = value == threshold if fam.relation == "=" else value > threshold
    checks["threshold"] = {"theorem": theorem.number, "bound": threshold,
                           "relation": fam.relation, "ok": side}

    decision = is_critical_avoidable(g, inst.k, n)
    checks["critical_avoidable"] = {
        "k": inst.k, "n": n, "holds": decision.holds,
        "ok": not decision.holds and validate_certificate(g, decision.certificate)}

    probe = Certificate("critical-witness", inst.k, inst.W, inst.e, inst.X, 0, 2 * len(inst.X))
    built = replace(probe, criterion=certificate_value(g, probe))
    checks["construction_certificate"] = {
        "W": built.W, "e": built.e, "X": built.X,
        "criterion": built.criterion, "bound": built.bound,
        "expected_criterion": inst.expected_criterion, "expected_bound": inst.expected_bound,
        "ok": (built.criterion == inst.expected_criterion and built.bound == inst.expected_bound
               and validate_certificate(g, built))}

    h, label = residual_graph(g, inst.W, inst.e)
    keep = [i for i, old in enumerate(label) if old not in set(inst.X)]
    computed = describe_components(induced_subgraph(h, keep))
    stated = describe_components(parse_construction(inst.stated_remainder))
    # informational only: the printed form is recorded, not trusted
    checks["remainder"] = {"stated": stated, "computed": computed, "matches": stated == computed}

    conclusion = all(c["ok"] for c in checks.values() if "ok" in c)
    return VerificationReport(
        f"remark {remark} (n={n}, r={r}): {inst.expression}", emit_graph6(g),
        True, conclusion, _verdict(True, conclusion), checks, decision.certificate)


def verify_theorem_instance(theorem: int, g: Graph, n: int, r: int, *,
                            label: str = "", check_vacuous: bool = False) -> VerificationReport:
    """Check one graph against theorem 6, 7 or 8 for the given n and r.

    The conclusion is only computed when the hypothesis holds, unless
    ``check_vacuous`` asks for it anyway.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem}")
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    thm = THEOREMS[theorem]
    kappa = connectivity(g)
    value = parameter_of(g, thm.parameter).value
    threshold = thm.threshold(n, r)
    conn_ok = kappa >= n + r + 2
    param_ok = value > threshold
    hypothesis = conn_ok and param_ok
    checks: dict[str, Any] = {
        "connectivity": {"value": kappa, "required": n + r + 2, "ok": conn_ok},
        thm.parameter: {"value": value, "threshold": threshold, "ok": param_ok},
    }
    conclusion = None
    certificate = None
    if hypothesis or (check_vacuous and n <= g.order):
        decision = is_critical_avoidable(g, thm.k, n)
        conclusion, certificate = decision.holds, decision.certificate
        checks["critical_avoidable"] = {"k": thm.k, "n": n, "holds": decision.holds,
                                        "vacuous": decision.vacuous}
    return VerificationReport(label or f"theorem {theorem} (n={n}, r={r})", emit_graph6(g),
                              hypothesis, conclusion, _verdict(hypothesis, conclusion),
                              checks, certificate)


def _lemma1_residual(g: Graph, n: int, r: int, ws: VertexSet, e: Edge) -> Graph:
    if connectivity(g) < n + r + 2:
        raise ValueError(f"graph is not {n + r + 2}-connected")
    if len(set(ws)) != n:
        raise ValueError(f"W must have exactly {n} vertices")
    if not g.has_edge(*e) or set(e) & set(ws):
        raise ValueError(f"{e} is not an edge of G - W")
    return residual_graph(g, tuple(sorted(ws)), e)[0]


def check_lemma1(g: Graph, n: int, r: int, ws: VertexSet, e: Edge) -> bool:
    """No X with |X| <= r + 1 has sun(G - W - e - X) >= 2|X| + 1."""
    h = _lemma1_residual(g, n, r, ws, e)
    return next(violating_sets(h, 3, max_size=r + 1), None) is None


def lemma1_min_violating_size(g: Graph, n: int, r: int, ws: VertexSet, e: Edge) -> Optional[int]:
    """Smallest |X| with sun(G - W - e - X) >= 2|X| + 1, or None."""
    h = _lemma1_residual(g, n, r, ws, e)
    first = next(violating_sets(h, 3), None)
    return None if first is None else len(first[0])


@dataclass(frozen=True)
class HarnessParams:
    theorem: int
    n: int = 0
    r: int = 0
    seed: int = 0
    samples: int = 500
    max_order: int = 8
    min_order: int = 5

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem}")
        if self.n < 0 or self.r < 0:
            raise ValueError("n and r must be nonnegative")
        if not 1 <= self.min_order <= self.max_order <= DESK_MAX_ORDER:
            raise ValueError(f"need 1 <= min_order <= max_order <= {DESK_MAX_ORDER}")


def _remark_pool(params: HarnessParams) -> list[RemarkInstance]:
    remarks = THEOREMS[params.theorem].remarks
    pool = [build_remark_graph(*key) for key in sharpness_grid(params.max_order) if key[0] in remarks]
    return [inst for inst in pool if inst.graph.order >= params.min_order]


def sample_instances(params: HarnessParams) -> Iterator[tuple[str, Graph]]:
    """Deterministic stream of labelled random graphs.

    Mostly G(n, p) over the density grid; every fifth sample perturbs a
    small remark graph by toggling one or two vertex pairs and shuffling
    labels.
    """
    rng = random.Random(params.seed)
    pool = _remark_pool(params)
    for index in range(params.samples):
        if pool and index % 5 == 4:
            inst = rng.choice(pool)
            g = inst.graph
            pairs = [(u, v) for u, v in combinations(range(g.order), 2)]
            toggled = rng.sample(pairs, rng.randint(1, 2))
            edges = set(g.edges()) ^ set(toggled)
            perm = list(range(g.order))
            rng.shuffle(perm)
            g = relabel(build_graph(g.order, sorted(edges)), perm)
            yield f"#{index} remark {inst.remark} (n={inst.n}, r={inst.r}) toggled {sorted(toggled)}", g
        else:
            order = rng.randint(params.min_order, params.max_order)
            p = rng.choice(EDGE_PROBABILITIES)
            edges = [(u, v) for u, v in combinations(range(order), 2) if rng.random() < p]
            yield f"#{index} G({order}, {p})", build_graph(order, edges)


def hunt(params: HarnessParams) -> Iterator[VerificationReport]:
    """Check every sampled graph against the theorem; reports come in sample order."""
    for label, g in sample_instances(params):
        yield verify_theorem_instance(params.theorem, g, params.n, params.r, label=label)


def summarize(reports: list[VerificationReport]) -> dict[str, int]:
    counts = Counter(rep.verdict for rep in reports)
    return {"samples": len(reports),
            "consistent": counts["consistent"],
            "vacuous": counts["vacuous"],
            "counterexamples": counts["COUNTEREXAMPLE"]}
