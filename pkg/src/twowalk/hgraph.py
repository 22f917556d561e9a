"""Assemble the spanning Eulerian subgraph H of 2*G and walk its Euler circuit."""

from __future__ import annotations

from .first_class import FirstClassEdges
from .gamma import GammaGraph
from .graph import EdgeClass, Graph, MultiGraph, Walk
from .tower import CliqueTower


class NoCrossEdge(RuntimeError):
    pass


class NotEulerian(ValueError):
    pass


def step1_first_class(n: int, e: FirstClassEdges) -> MultiGraph:
    h = MultiGraph(n)
    for d, q in e.edges:
        h.add(d, q, EdgeClass.FIRST)
    return h


def step2_second_class(g: Graph, t: CliqueTower, gamma: GammaGraph, h: MultiGraph) -> MultiGraph:
    """Realise each red edge w_i w_j by one G-edge between Q_i and Q_j.

    Among the candidates, prefer those with fewer odd-degree endpoints in H
    so far, then the lexicographically smallest ``(x in Q_i, y in Q_j)``.
    """
    deg = h.degrees()
    mult = h.multiplicities()
    for i, j, _ in gamma.red_edges():
        best = None
        for x in t.cliques[i]:
            for y in sorted(g.adj[x] & set(t.cliques[j])):
                if mult[(min(x, y), max(x, y))] >= 2:
                    continue
                key = (deg[x] % 2 + deg[y] % 2, x, y)
                if best is None or key < best:
                    best = key
        if best is None:
            raise NoCrossEdge(f"no usable edge between Q{i + 1} and Q{j + 1}")
        _, x, y = best
        h.add(x, y, EdgeClass.SECOND)
        deg[x] += 1
        deg[y] += 1
        mult[(min(x, y), max(x, y))] += 1
    return h


def step3_third_class(g: Graph, t: CliqueTower, h: MultiGraph) -> MultiGraph:
    """Fix degrees and connect each clique with edges inside it.

    Odd vertices are matched (degree-3 vertices first, then degree-1, each
    group sorted) so every degree becomes 0, 2 or 4. The vertices still at
    0 or 2 are then joined by a cycle in sorted order, or by a parallel pair
    when there are exactly two of them and the pair has room for it.
    """
    deg = h.degrees()
    mult = h.multiplicities()

    def add(x: int, y: int) -> None:
        h.add(x, y, EdgeClass.THIRD)
        deg[x] += 1
        deg[y] += 1
        mult[(min(x, y), max(x, y))] += 1

    for q in t.cliques:
        odd = sorted((v for v in q if deg[v] % 2), key=lambda v: (-deg[v], v))
        for a, b in zip(odd[::2], odd[1::2]):
            add(a, b)
        low = [v for v in q if deg[v] in (0, 2)]
        if len(low) >= 3:
            for a, b in zip(low, low[1:] + low[:1]):
                add(a, b)
        elif len(low) == 2:
            a, b = low
            if mult[(a, b)] == 0:
                add(a, b)
                add(a, b)
        elif len(low) == 1 and deg[low[0]] == 0:
            # only reachable when two degree-3 vertices were matched to each
            # other: route that matching edge through the stranded vertex
            z = low[0]
            for x, y, c in list(h.edges):
                if c is EdgeClass.THIRD and x in q and y in q:
                    h.edges.remove((x, y, c))
                    mult[(min(x, y), max(x, y))] -= 1
                    deg[x] -= 1
                    deg[y] -= 1
                    add(x, z)
                    add(z, y)
                    break
    return h


def build_h(g: Graph, t: CliqueTower, e: FirstClassEdges, gamma: GammaGraph) -> MultiGraph:
    h = step1_first_class(g.n, e)
    step2_second_class(g, t, gamma, h)
    step3_third_class(g, t, h)
    return h


def euler_circuit(h: MultiGraph) -> Walk:
    """Hierholzer's algorithm over edge occurrences, starting at the smallest used vertex."""
    incident: list[list[tuple[int, int]]] = [[] for _ in range(h.n)]
    for idx, (u, v, _) in enumerate(h.edges):
        incident[u].append((v, idx))
        incident[v].append((u, idx))
    for v, inc in enumerate(incident):
        if len(inc) % 2:
            raise NotEulerian(f"vertex {v} has odd degree {len(inc)}")
        inc.sort(reverse=True)  # pop() takes the smallest neighbour first
    if not h.edges:
        return Walk([])
    start = min(v for v in range(h.n) if incident[v])
    used = [False] * len(h.edges)
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        inc = incident[v]
        while inc and used[inc[-1][1]]:
            inc.pop()
        if inc:
            w, idx = inc.pop()
            used[idx] = True
            stack.append(w)
        else:
            circuit.append(stack.pop())
    if not all(used):
        raise NotEulerian("H is not connected")
    circuit.reverse()
    return Walk(circuit)
