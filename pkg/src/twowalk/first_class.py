"""First-class edges: every independent-set vertex gets two private clique neighbours."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, components
from .tower import CliqueTower


@dataclass(frozen=True)
class FirstClassEdges:
    edges: tuple[tuple[int, int], ...]  # (d, q), sorted

    @property
    def saturated(self) -> tuple[int, ...]:
        return tuple(sorted(q for _, q in self.edges))


@dataclass(frozen=True)
class HallViolator:
    """A set of independent vertices with fewer than twice as many neighbours."""

    d0: tuple[int, ...]
    neighbours: tuple[int, ...]


@dataclass(frozen=True)
class ToughnessCertificate:
    cut: tuple[int, ...]
    component_count: int
    ratio: Fraction

    def to_json(self) -> dict:
        return {
            "cut": list(self.cut),
            "components": self.component_count,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }


class Degenerate(ValueError):
    """Removing N(D0) leaves a connected graph, so no toughness conclusion follows."""


def select_first_class_edges(g: Graph, t: CliqueTower) -> FirstClassEdges | HallViolator:
    """Match every D-vertex to two distinct clique vertices, each used once.

    Each D-vertex is split into two unit-demand copies and a maximum
    bipartite matching is grown by shortest augmenting paths, scanning
    D-vertices and clique vertices in increasing id. If some copy stays
    unmatched, the D-vertices reachable from free copies by alternating
    paths form a Hall violator.
    """
    d_vertices = t.first_class_vertices
    q_set = set(t.clique_vertices)
    nbrs = {d: sorted(g.adj[d] & q_set) for d in d_vertices}
    copies = [(d, c) for d in d_vertices for c in (0, 1)]
    match_copy: dict[tuple[int, int], int] = {}
    match_q: dict[int, tuple[int, int]] = {}

    for copy in copies:
        _augment(copy, nbrs, match_copy, match_q)

    free = [c for c in copies if c not in match_copy]
    if not free:
        edges = tuple(sorted((d, q) for (d, _), q in match_copy.items()))
        return FirstClassEdges(edges)

    reached = set(free)
    queue = deque(free)
    while queue:
        d, _ = queue.popleft()
        for q in nbrs[d]:
            other = match_q[q]  # q is matched, otherwise an augmenting path exists
            if other not in reached:
                reached.add(other)
                queue.append(other)
    d0 = tuple(sorted({d for d, _ in reached}))
    neighbourhood = tuple(sorted(set().union(*(nbrs[d] for d in d0))))
    return HallViolator(d0, neighbourhood)


def _augment(root, nbrs, match_copy, match_q) -> bool:
    parent: dict[int, tuple[int, int]] = {}
    queue = deque([root])
    seen_copies = {root}
    while queue:
        copy = queue.popleft()
        for q in nbrs[copy[0]]:
            if q in parent:
                continue
            parent[q] = copy
            owner = match_q.get(q)
            if owner is None:
                # flip the alternating path ending at q
                while True:
                    c = parent[q]
                    previous = match_copy.get(c)
                    match_copy[c] = q
                    match_q[q] = c
                    if c == root:
                        return True
                    q = previous
            if owner not in seen_copies:
                seen_copies.add(owner)
                queue.append(owner)
    return False


def certificate_from_violator(g: Graph, d0) -> ToughnessCertificate:
    """Cut N(D0); every vertex of D0 becomes an isolated component."""
    d0 = set(d0)
    cut = set().union(*(g.adj[d] for d in d0)) if d0 else set()
    if len(cut) >= 2 * len(d0):
        raise ValueError("not a Hall violator: |N(D0)| >= 2|D0|")
    rest = [v for v in range(g.n) if v not in cut]
    omega = len(components(g, rest))
    if omega <= 1:
        raise Degenerate(f"G - N(D0) is connected for D0={sorted(d0)}")
    return ToughnessCertificate(tuple(sorted(cut)), omega, Fraction(len(cut), omega))
