"""End to end: 2K2-free graph in, verified 2-walk (or toughness certificate) out."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .analysis import (
    TooLarge,
    find_2k2,
    hamiltonian_cycle_exact,
    two_walk_exact,
)
from .first_class import (
    Degenerate,
    FirstClassEdges,
    HallViolator,
    ToughnessCertificate,
    certificate_from_violator,
    select_first_class_edges,
)
from .gamma import GammaGraph, GammaInconsistency, add_blue_edges, add_red_edges, validate_gamma
from .graph import EdgeClass, Graph, MultiGraph, Walk
from .hgraph import NoCrossEdge, build_h, euler_circuit
from .tower import CliqueTower, NotTwoK2Free, clique_tower, validate_tower
from .verify import VerdictReport, verify_h, verify_two_walk

log = logging.getLogger(__name__)


class ConstructionFailed(RuntimeError):
    def __init__(self, message: str, trace: Trace):
        super().__init__(message)
        self.trace = trace


class NoWalkFound(RuntimeError):
    pass


@dataclass
class Trace:
    tower: CliqueTower | None = None
    first_class: FirstClassEdges | HallViolator | None = None
    gamma: GammaGraph | None = None
    h: MultiGraph | None = None
    reports: dict[str, VerdictReport] = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {}
        if self.tower is not None:
            out["tower"] = {
                "cliques": [list(q) for q in self.tower.cliques],
                "levels": [list(d) for d in self.tower.levels],
            }
        if isinstance(self.first_class, FirstClassEdges):
            out["first_class"] = [list(e) for e in self.first_class.edges]
        elif isinstance(self.first_class, HallViolator):
            out["hall_violator"] = list(self.first_class.d0)
        if self.gamma is not None:
            out["gamma"] = self.gamma.to_json()
        if self.h is not None:
            out["h"] = {
                "edges": [[u, v, c.value] for u, v, c in self.h.edges],
                "degrees": self.h.degrees(),
            }
        if self.reports:
            out["reports"] = {k: r.to_json() for k, r in self.reports.items()}
        return out


@dataclass
class WalkResult:
    """Either a walk (with the route that produced it) or a certificate."""

    walk: Walk | None = None
    certificate: ToughnessCertificate | None = None
    path: str = "constructive"  # "constructive", "fallback" or "trivial"
    trace: Trace = field(default_factory=Trace)

    def classes(self) -> dict[str, list[list[int]]]:
        h = self.trace.h
        if h is None or self.path != "constructive":
            return {"first": [], "second": [], "third": []}
        return {
            c.value: [list(e) for e in h.of_class(c)]
            for c in (EdgeClass.FIRST, EdgeClass.SECOND, EdgeClass.THIRD)
        }

    def to_json(self) -> dict:
        if self.walk is None:
            assert self.certificate is not None
            return self.certificate.to_json()
        return {
            "walk": list(self.walk.vertices),
            "visits": {str(v): c for v, c in self.walk.visit_counts.items()},
            "path": self.path,
            "classes": self.classes(),
        }


def construct(g: Graph) -> tuple[Walk | ToughnessCertificate | HallViolator, Trace]:
    """Run the construction on a graph with at least one edge.

    Returns a verified walk, a certificate, or the raw violator when the
    certificate degenerates. Raises ConstructionFailed when an intermediate
    object fails its independent check.
    """
    trace = Trace()
    tower = clique_tower(g)
    trace.tower = tower
    trace.reports["tower"] = validate_tower(g, tower)
    if not trace.reports["tower"]:
        raise ConstructionFailed("invalid clique tower", trace)

    chosen = select_first_class_edges(g, tower)
    trace.first_class = chosen
    if isinstance(chosen, HallViolator):
        try:
            return certificate_from_violator(g, chosen.d0), trace
        except Degenerate:
            return chosen, trace

    try:
        gamma = add_red_edges(add_blue_edges(tower, chosen))
    except GammaInconsistency as exc:
        raise ConstructionFailed(str(exc), trace) from exc
    trace.gamma = gamma
    trace.reports["gamma"] = validate_gamma(gamma)
    if not trace.reports["gamma"]:
        raise ConstructionFailed("invalid auxiliary multigraph", trace)

    try:
        h = build_h(g, tower, chosen, gamma)
    except NoCrossEdge as exc:
        raise ConstructionFailed(str(exc), trace) from exc
    trace.h = h
    trace.reports["h"] = verify_h(g, h)
    if not trace.reports["h"]:
        raise ConstructionFailed("invalid H", trace)

    walk = euler_circuit(h)
    trace.reports["walk"] = verify_two_walk(g, walk)
    if not trace.reports["walk"]:
        raise ConstructionFailed("Euler circuit is not a 2-walk", trace)
    return walk, trace


def two_walk(g: Graph, fallback_limit: int = 14) -> WalkResult:
    witness = find_2k2(g)
    if witness is not None:
        raise NotTwoK2Free(f"induced 2K2 on {witness}", witness)
    if g.n <= 1:
        return WalkResult(walk=Walk(list(range(g.n))), path="trivial")
    if g.m == 0:
        cert = ToughnessCertificate((), g.n, Fraction(0))
        return WalkResult(certificate=cert)

    try:
        outcome, trace = construct(g)
    except ConstructionFailed as exc:
        log.warning("construction failed: %s", exc)
        trace = exc.trace
    else:
        if isinstance(outcome, Walk):
            return WalkResult(walk=outcome, path="constructive", trace=trace)
        if isinstance(outcome, ToughnessCertificate):
            return WalkResult(certificate=outcome, path="constructive", trace=trace)

    walk = _fallback(g, fallback_limit)
    if walk is None:
        raise NoWalkFound("construction unavailable and exact search found no 2-walk")
    return WalkResult(walk=walk, path="fallback", trace=trace)


def _fallback(g: Graph, limit: int) -> Walk | None:
    try:
        walk = hamiltonian_cycle_exact(g, limit_n=max(limit, 0))
        if walk is None:
            walk = two_walk_exact(g, limit_n=limit)
    except TooLarge:
        return None
    if walk is not None and not verify_two_walk(g, walk):
        return None
    return walk
