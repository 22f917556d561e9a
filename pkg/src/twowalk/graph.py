"""Simple graphs, edge-labelled multigraphs, closed walks and the edge-list format."""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the frozenset of neighbours of ``v``.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)

    def complement(self) -> Graph:
        every = frozenset(range(self.n))
        return Graph(self.n, tuple(every - a - {v} for v, a in enumerate(self.adj)))


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (of the subgraph induced on ``within`` if given).

    Each component is sorted; components are ordered by their smallest vertex.
    """
    alive = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``s``, relabelled densely.

    Returns ``(h, ids)`` where ``ids[i]`` is the original id of vertex ``i`` of ``h``.
    """
    ids = tuple(sorted(set(s)))
    if len(ids) == g.n and (not ids or ids[-1] == g.n - 1 and ids[0] == 0):
        return g, ids
    for v in ids:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    local = {v: i for i, v in enumerate(ids)}
    adj = tuple(frozenset(local[w] for w in g.adj[v] if w in local) for v in ids)
    return Graph(len(ids), adj), ids


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = set(s)
    return all(len(g.adj[v] & vs) == len(vs) - 1 for v in vs)


# ---------------------------------------------------------------------------
# edge-list format


def parse_graph(text: str) -> Graph:
    """Parse the ``p <n> <m>`` / ``e <u> <v>`` edge-list format.

    Without a header, ``n`` is one more than the largest id mentioned.
    """
    n: int | None = None
    adj: list[set[int]] | None = None
    pending: list[tuple[int, int]] = []  # edges seen while n is unknown
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if "#" in raw:
            raw = raw.split("#", 1)[0]
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "e":
            if len(parts) != 3:
                raise ParseError(lineno, "edge must be 'e <u> <v>'")
            u = _nonneg(parts[1], lineno)
            v = _nonneg(parts[2], lineno)
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            if adj is None:
                pending.append((u, v))
                continue
            if u >= n or v >= n:  # type: ignore[operator]
                raise ParseError(lineno, f"vertex id out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        elif tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if pending:
                raise ParseError(lineno, "header after edges")
            if len(parts) != 3:
                raise ParseError(lineno, "header must be 'p <n> <m>'")
            n = _nonneg(parts[1], lineno)
            _nonneg(parts[2], lineno)
            adj = [set() for _ in range(n)]
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if adj is None:
        return Graph.from_edges(1 + max((v for e in pending for v in e), default=-1), pending)
    return Graph(len(adj), tuple(map(frozenset, adj)))


def _nonneg(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {token!r}") from None
    if value < 0:
        raise ParseError(lineno, f"negative id {value}")
    return value


def serialize_graph(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    edges = g.edges()
    lines.append(f"p {g.n} {len(edges)}")
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# multigraphs


class EdgeClass(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"
    BLUE = "blue"
    RED = "red"


@dataclass
class MultiGraph:
    """Multigraph kept as a list of edge occurrences ``(u, v, class)``."""

    n: int
    edges: list[tuple[int, int, EdgeClass]] = field(default_factory=list)

    def add(self, u: int, v: int, cls: EdgeClass) -> None:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        self.edges.append((u, v, cls))

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b, _ in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def multiplicities(self) -> Counter[tuple[int, int]]:
        return Counter((min(u, v), max(u, v)) for u, v, _ in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        return sum((min(a, b), max(a, b)) == key for a, b, _ in self.edges)

    def of_class(self, cls: EdgeClass) -> list[tuple[int, int]]:
        return [(u, v) for u, v, c in self.edges if c is cls]

    def components(self) -> list[list[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return components(Graph(self.n, tuple(frozenset(a) for a in adj)))


def multigraph_degree(h: MultiGraph, v: int) -> int:
    return h.degree(v)


@dataclass(frozen=True)
class Walk:
    """Closed walk; ``vertices[0] == vertices[-1]`` unless the walk is empty or a single vertex.

    The repeated endpoint of a closed walk is counted once.
    """

    vertices: tuple[int, ...]

    def __init__(self, vertices: Sequence[int]):
        object.__setattr__(self, "vertices", tuple(vertices))

    @property
    def visit_counts(self) -> dict[int, int]:
        vs = self.vertices
        if len(vs) > 1 and vs[0] == vs[-1]:
            vs = vs[:-1]
        return dict(sorted(Counter(vs).items()))

    def __len__(self) -> int:
        return max(len(self.vertices) - 1, 0)
