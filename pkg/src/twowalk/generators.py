"""Seeded graph families: split, co-chordal, filtered 2-tough, and the worked examples.

All randomness comes from SplitMix64 so a seed names the same graph on
every platform and in every implementation that follows README's recipe.
"""

from __future__ import annotations

from .analysis import is_2k2_free, toughness_at_least
from .graph import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Integer in [0, n) by multiply-shift."""
        return (self.next_u64() * n) >> 64

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


class Exhausted(RuntimeError):
    pass


def gen_split(
    clique_size: int,
    indep_size: int,
    attach_prob: float,
    seed: int,
    min_attach: int = 0,
) -> Graph:
    """Clique on ``0..clique_size-1``, independent set after it.

    Each (independent, clique) pair is drawn in row order with ``attach_prob``;
    vertices left with fewer than ``min_attach`` clique neighbours are topped
    up by uniform draws among the missing ones.
    """
    if clique_size < 1:
        raise ValueError("clique_size must be at least 1")
    rng = SplitMix64(seed)
    c = clique_size
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    for d in range(c, c + indep_size):
        chosen = [q for q in range(c) if rng.random() < attach_prob]
        if len(chosen) < min(min_attach, c):
            taken = set(chosen)
            missing = [q for q in range(c) if q not in taken]
            while len(chosen) < min(min_attach, c):
                chosen.append(missing.pop(rng.below(len(missing))))
        edges.extend((q, d) for q in chosen)
    return Graph.from_edges(c + indep_size, edges)


def gen_chordal(n: int, edge_prob: float, seed: int) -> Graph:
    """Chordal graph grown vertex by vertex.

    Vertex ``v`` picks a random earlier vertex ``u`` and attaches to a
    random clique inside ``{u} + N(u)``, each candidate accepted with
    ``edge_prob``. Earlier neighbourhoods are cliques, so ``n-1, ..., 0`` is
    a perfect elimination order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = SplitMix64(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for v in range(1, n):
        u = rng.below(v)
        pool = sorted(adj[u])
        rng.shuffle(pool)
        clique: list[int] = []
        for w in [u] + pool:
            if rng.random() < edge_prob and all(x in adj[w] for x in clique):
                clique.append(w)
        for w in clique:
            adj[v].add(w)
            adj[w].add(v)
    return Graph(n, tuple(frozenset(a) for a in adj))


def gen_co_chordal(n: int, edge_prob: float, seed: int) -> Graph:
    """Complement of ``gen_chordal``; chordal graphs have no induced C4, so this is 2K2-free."""
    return gen_chordal(n, edge_prob, seed).complement()


def is_filtered_2tough_candidate(g: Graph) -> bool:
    return is_2k2_free(g) and toughness_at_least(g, 2)


def gen_filtered_2tough(n: int, seed: int, max_attempts: int = 500) -> Graph:
    """First co-chordal or dense split candidate on ``n`` vertices that is 2-tough."""
    rng = SplitMix64(seed)
    for attempt in range(max_attempts):
        sub = rng.next_u64()
        if attempt % 2 == 0:
            prob = 0.3 + 0.4 * rng.random()
            g = gen_co_chordal(n, prob, sub)
        else:
            indep = 1 + rng.below(max(1, n // 3))
            prob = 0.6 + 0.35 * rng.random()
            g = gen_split(n - indep, indep, prob, sub)
        if is_filtered_2tough_candidate(g):
            return g
    raise Exhausted(f"no 2-tough candidate on {n} vertices after {max_attempts} attempts")


# q1..q4 = 0..3, d1 = 4, d2 = 5
G1_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (2, 5), (3, 5)]

# a..g = 0..6: K4 on a-d, edge ef, e ~ a, d, f ~ a, c, g ~ c, d
G2_EDGES = [
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (4, 5), (0, 4), (3, 4), (0, 5), (2, 5), (2, 6), (3, 6),
]  # fmt: skip

FIXED = {"G1": (6, G1_EDGES), "G2": (7, G2_EDGES)}


def fixed_graph(name: str) -> Graph:
    try:
        n, edges = FIXED[name]
    except KeyError:
        raise ValueError(f"unknown fixed graph {name!r}; choose from {sorted(FIXED)}") from None
    return Graph.from_edges(n, edges)
