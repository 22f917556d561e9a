"""The auxiliary Eulerian multigraph on clique nodes and independent-set nodes.

Node ids: clique Q_{i+1} is node ``i`` (0 <= i < k); the j-th vertex of the
sorted first-class set D is node ``k + j``. Blue edges are the images of the
first-class edges, red edges make every degree even and join the components.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .first_class import FirstClassEdges
from .graph import EdgeClass, MultiGraph
from .tower import CliqueTower
from .verify import VerdictReport


class GammaInconsistency(RuntimeError):
    pass


@dataclass
class GammaGraph:
    k: int
    d_vertices: tuple[int, ...]
    graph: MultiGraph
    # per edge occurrence: (d, q) for blue, (i, j, role) for red with role "cycle" or "pairing"
    origin: list[tuple] = field(default_factory=list)

    def node_of_d(self, d: int) -> int:
        return self.k + self.d_vertices.index(d)

    def is_w(self, node: int) -> bool:
        return node < self.k

    def label(self, node: int) -> str:
        return f"w{node + 1}" if node < self.k else f"d{self.d_vertices[node - self.k]}"

    def red_edges(self) -> list[tuple[int, int, str]]:
        return [o for (_, _, c), o in zip(self.graph.edges, self.origin) if c is EdgeClass.RED]

    def to_json(self) -> dict:
        return {
            "nodes": [self.label(v) for v in range(self.graph.n)],
            "edges": [
                {"u": self.label(u), "v": self.label(v), "color": c.value}
                for u, v, c in self.graph.edges
            ],
        }


def add_blue_edges(t: CliqueTower, e: FirstClassEdges) -> GammaGraph:
    d_vertices = t.first_class_vertices
    index = {d: t.k + j for j, d in enumerate(d_vertices)}
    clique_of = t.clique_of()
    gamma = GammaGraph(t.k, d_vertices, MultiGraph(t.k + len(d_vertices)))
    for d, q in e.edges:
        if q not in clique_of or d not in index:
            raise GammaInconsistency(f"first-class edge {d}-{q} does not join D to a clique")
        gamma.graph.add(index[d], clique_of[q], EdgeClass.BLUE)
        gamma.origin.append((d, q))
    return gamma


def add_red_edges(gamma: GammaGraph) -> GammaGraph:
    """Make the blue multigraph connected and even.

    One component: pair the odd nodes in sorted order. Several components,
    ordered by smallest clique node: each contributes two odd nodes (or one
    clique node used twice when all its degrees are even) and consecutive
    components are joined in a cycle; the remaining odd nodes are paired
    inside their own component.
    """
    g = gamma.graph
    deg = g.degrees()
    for node in range(gamma.k, g.n):
        if deg[node] % 2:
            raise GammaInconsistency(f"independent-set node {gamma.label(node)} has odd degree")
    comps = g.components()
    comps.sort(key=min)  # every component holds a clique node, and those come first

    def red(u: int, v: int, role: str) -> None:
        if u == v:
            raise GammaInconsistency(f"red loop at {gamma.label(u)}")
        g.add(u, v, EdgeClass.RED)
        gamma.origin.append((min(u, v), max(u, v), role))

    def pair_up(odd: list[int]) -> None:
        if len(odd) % 2:
            raise GammaInconsistency("odd number of odd-degree nodes in a component")
        for a, b in zip(odd[::2], odd[1::2]):
            red(a, b, "pairing")

    if len(comps) == 1:
        pair_up([v for v in comps[0] if deg[v] % 2])
        return gamma

    reps: list[tuple[int, int]] = []  # (minus, plus)
    leftovers: list[list[int]] = []
    for comp in comps:
        odd = [v for v in comp if deg[v] % 2]
        if odd:
            reps.append((odd[0], odd[1]))
            leftovers.append(odd[2:])
        else:
            w = min(comp)
            if not gamma.is_w(w):
                raise GammaInconsistency("component without a clique node")
            reps.append((w, w))
            leftovers.append([])
    count = len(reps)
    for i in range(count):
        plus = reps[i][1]
        minus = reps[(i + 1) % count][0]
        red(plus, minus, "cycle")
    for odd in leftovers:
        pair_up(odd)
    return gamma


def build_gamma(t: CliqueTower, e: FirstClassEdges) -> GammaGraph:
    return add_red_edges(add_blue_edges(t, e))


def validate_gamma(gamma: GammaGraph) -> VerdictReport:
    report = VerdictReport()
    g = gamma.graph
    blue = [0] * g.n
    red = [0] * g.n
    for u, v, c in g.edges:
        if u == v:
            report.fail("loop", f"loop at {gamma.label(u)}")
        if c is EdgeClass.BLUE:
            if gamma.is_w(u) == gamma.is_w(v):
                report.fail("blue placement", f"{gamma.label(u)}-{gamma.label(v)}")
            blue[u] += 1
            blue[v] += 1
        elif c is EdgeClass.RED:
            if not (gamma.is_w(u) and gamma.is_w(v)):
                report.fail("red placement", f"{gamma.label(u)}-{gamma.label(v)} touches D'")
            red[u] += 1
            red[v] += 1
        else:
            report.fail("edge class", f"{c.value} edge in Gamma")
    for node in range(g.n):
        total = blue[node] + red[node]
        if total % 2:
            report.fail("even degree", f"{gamma.label(node)} has degree {total}")
        if gamma.is_w(node):
            if red[node] > 2:
                report.fail("red incidence", f"{gamma.label(node)} has {red[node]} red edges")
        elif blue[node] != 2 or red[node]:
            report.fail(
                "D' incidence",
                f"{gamma.label(node)} has {blue[node]} blue and {red[node]} red edges",
            )
    if len(g.components()) > 1:
        report.fail("connected", "Gamma is disconnected")
    return report
