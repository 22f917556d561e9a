"""Clique tower: peel weakly dominating maximum cliques off a 2K2-free graph."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import find_weakly_dominating_maximum_clique
from .graph import Graph, components, induced, is_clique
from .verify import VerdictReport


class NotTwoK2Free(ValueError):
    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class CliqueTower:
    cliques: tuple[tuple[int, ...], ...]
    levels: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.cliques)

    @property
    def first_class_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for level in self.levels for v in level))

    @property
    def clique_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for q in self.cliques for v in q))

    def clique_of(self) -> dict[int, int]:
        """Map each clique vertex to the 0-based index of its clique."""
        return {v: i for i, q in enumerate(self.cliques) for v in q}

    def serialize(self) -> str:
        lines = []
        for i, (q, d) in enumerate(zip(self.cliques, self.levels), start=1):
            lines.append(f"Q{i}: {' '.join(map(str, q))}".rstrip())
            lines.append(f"D{i}: {' '.join(map(str, d))}".rstrip())
        return "\n".join(lines) + "\n"


def clique_tower(g: Graph) -> CliqueTower:
    """Decompose ``g`` into cliques Q_1..Q_k and independent levels D_1..D_k.

    Each round takes a weakly dominating maximum clique of the current
    non-trivial component, removes it, and sends the isolated vertices of
    the remainder to the next level. The remainder may keep at most one
    component with edges.
    """
    if g.m == 0:
        raise ValueError("graph has no edges")
    cliques: list[tuple[int, ...]] = []
    levels: list[tuple[int, ...]] = []
    alive = list(range(g.n))
    while True:
        sub, ids = induced(g, alive)
        q = tuple(ids[i] for i in find_weakly_dominating_maximum_clique(sub))
        cliques.append(q)
        taken = set(q)
        rest = [v for v in alive if v not in taken]
        parts = components(g, rest)
        big = [c for c in parts if len(c) > 1]
        if len(big) > 1:
            raise NotTwoK2Free(
                "remainder has two components with edges",
                witness=_edge_pair_witness(g, big[0], big[1]),
            )
        levels.append(tuple(sorted(c[0] for c in parts if len(c) == 1)))
        if not big:
            break
        alive = big[0]
    return CliqueTower(tuple(cliques), tuple(levels))


def _edge_pair_witness(g: Graph, a: list[int], b: list[int]) -> tuple[int, ...]:
    def some_edge(comp: list[int]) -> tuple[int, int]:
        inside = set(comp)
        for u in comp:
            for w in sorted(g.adj[u]):
                if w in inside:
                    return (u, w)
        raise AssertionError("component without edge")

    return some_edge(a) + some_edge(b)


def validate_tower(g: Graph, t: CliqueTower) -> VerdictReport:
    report = VerdictReport()
    if len(t.cliques) != len(t.levels):
        report.fail("shape", f"{len(t.cliques)} cliques but {len(t.levels)} levels")
    everything = [v for part in (*t.cliques, *t.levels) for v in part]
    if len(everything) != len(set(everything)):
        report.fail("partition", "a vertex appears twice")
    if set(everything) != set(range(g.n)):
        missing = sorted(set(range(g.n)) - set(everything))
        report.fail("partition", f"vertices not covered: {missing}")
    for i, q in enumerate(t.cliques, start=1):
        if len(q) < 2:
            report.fail("clique size", f"|Q{i}| = {len(q)} < 2")
        if not is_clique(g, q):
            report.fail("clique", f"Q{i} is not a clique")
        if i > 1 and len(q) > len(t.cliques[i - 2]):
            report.fail("sizes not non-increasing", f"|Q{i}| > |Q{i - 1}|")
    d = set(t.first_class_vertices)
    qs = set(t.clique_vertices)
    for v in sorted(d):
        if g.adj[v] & d:
            report.fail("D not independent", f"vertex {v} has a neighbour in D")
        if not g.adj[v] <= qs:
            report.fail("D neighbourhood", f"vertex {v} has a neighbour outside the cliques")
    for i in range(len(t.cliques)):
        qi = t.cliques[i]
        reach = set().union(*(g.adj[v] for v in qi))
        for j in range(i + 1, len(t.cliques)):
            if not reach & set(t.cliques[j]):
                report.fail("cross edge", f"no edge joins Q{i + 1} and Q{j + 1}")
    return report
