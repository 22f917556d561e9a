"""Independent checks of walks, H graphs and toughness certificates.

Everything here is recomputed from the input graph; nothing is taken from
the builders except the object being checked.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import EdgeClass, Graph, MultiGraph, Walk, components


@dataclass
class VerdictReport:
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, check: str, detail: str) -> None:
        self.violations.append((check, detail))

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"check": c, "detail": d} for c, d in self.violations],
        }


def verify_two_walk(g: Graph, w: Walk, k: int = 2) -> VerdictReport:
    report = VerdictReport()
    vs = list(w.vertices)
    if g.n == 0:
        if vs:
            report.fail("spanning", "walk on the empty graph must be empty")
        return report
    if not vs:
        report.fail("spanning", "empty walk")
        return report
    for v in vs:
        if not 0 <= v < g.n:
            report.fail("vertex", f"{v} is not a vertex")
            return report
    if len(vs) > 1 and vs[0] != vs[-1]:
        report.fail("closed", f"walk starts at {vs[0]} and ends at {vs[-1]}")
    for a, b in zip(vs, vs[1:]):
        if b not in g.adj[a]:
            report.fail("adjacency", f"{a} and {b} are not adjacent")
    body = vs[:-1] if len(vs) > 1 else vs
    counts = Counter(body)
    missing = [v for v in range(g.n) if v not in counts]
    if missing:
        report.fail("spanning", f"vertices never visited: {missing}")
    for v, c in sorted(counts.items()):
        if c > k:
            report.fail("visits", f"vertex {v} visited {c} times")
    return report


def verify_h(g: Graph, h: MultiGraph) -> VerdictReport:
    report = VerdictReport()
    if h.n != g.n:
        report.fail("spanning", f"H has {h.n} vertices, G has {g.n}")
        return report
    mult: Counter[tuple[int, int]] = Counter()
    deg = [0] * g.n
    for u, v, cls in h.edges:
        if cls not in (EdgeClass.FIRST, EdgeClass.SECOND, EdgeClass.THIRD):
            report.fail("edge class", f"{u}-{v} labelled {cls.value}")
        if u == v:
            report.fail("loop", f"loop at {u}")
            continue
        mult[(min(u, v), max(u, v))] += 1
        deg[u] += 1
        deg[v] += 1
    for (u, v), c in sorted(mult.items()):
        if v not in g.adj[u]:
            report.fail("subgraph of 2*G", f"{u}-{v} is not an edge of G")
        if c > 2:
            report.fail("multiplicity", f"{u}-{v} has multiplicity {c}")
    for v, d in enumerate(deg):
        if d not in (2, 4):
            report.fail("degree", f"vertex {v} has degree {d}")
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in mult:
        adj[u].add(v)
        adj[v].add(u)
    comps = components(Graph(g.n, tuple(frozenset(a) for a in adj)))
    if len(comps) > 1:
        report.fail("connected", f"H has {len(comps)} components")
    return report


def verify_certificate(g: Graph, cert) -> VerdictReport:
    """Check a toughness certificate (``cut``, ``component_count``, ``ratio``) against ``g``."""
    report = VerdictReport()
    cut = set(cert.cut)
    if any(not 0 <= v < g.n for v in cut):
        report.fail("cut", "cut contains a non-vertex")
        return report
    omega = len(components(g, [v for v in range(g.n) if v not in cut]))
    if omega <= 1:
        report.fail("disconnects", f"G - S has {omega} component(s)")
    if omega != cert.component_count:
        report.fail("component count", f"stored {cert.component_count}, actual {omega}")
    if omega > 0:
        actual = Fraction(len(cut), omega)
        if Fraction(cert.ratio) != actual:
            report.fail("ratio", f"stored {cert.ratio}, actual {actual}")
        if actual >= 2:
            report.fail("ratio", f"{actual} is not < 2")
    return report
