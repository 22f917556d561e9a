"""Structural predicates and exact small-graph oracles."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Iterable

from .graph import Graph, Walk, components

log = logging.getLogger(__name__)

INFINITE = math.inf
"""Toughness of a graph with no disconnecting set (complete graphs)."""

Toughness = Fraction | float


class TooLarge(ValueError):
    pass


class NoWeaklyDominatingMaximumClique(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# 2K2


def find_2k2(g: Graph) -> tuple[int, int, int, int] | None:
    """Return ``(a, b, c, d)`` with ``ab``, ``cd`` an induced 2K2, or None.

    Scans non-adjacent pairs ``(a, c)``: a 2K2 through them needs
    ``b`` in N(a) - N(c) and ``d`` in N(c) - N(a) with ``b`` and ``d`` non-adjacent.
    The witness is normalised so that ``a < b``, ``c < d`` and ``a < c``.
    """
    adj = g.adj
    for a in range(g.n):
        na = adj[a]
        if not na:
            continue
        for c in range(a + 1, g.n):
            if c in na:
                continue
            nc = adj[c]
            # compute the cheaper difference first, it is usually empty
            if len(na) <= len(nc):
                only_a = na - nc
                if not only_a:
                    continue
                only_c = nc - na
            else:
                only_c = nc - na
                if not only_c:
                    continue
                only_a = na - nc
            if not only_a or not only_c:
                continue
            for d in sorted(only_c):
                rest = only_a - adj[d]
                if rest:
                    e1 = tuple(sorted((a, min(rest))))
                    e2 = tuple(sorted((c, d)))
                    first, second = sorted((e1, e2))
                    return (*first, *second)  # type: ignore[return-value]
    return None


def is_2k2_free(g: Graph) -> bool:
    return find_2k2(g) is None


def lemma1_check(g: Graph, a: Iterable[int]) -> bool:
    """True iff at most one component of ``g - a`` contains an edge."""
    removed = set(a)
    rest = [v for v in range(g.n) if v not in removed]
    nontrivial = [c for c in components(g, rest) if len(c) > 1]
    return len(nontrivial) <= 1


# ---------------------------------------------------------------------------
# cliques and domination


def maximum_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All cliques of maximum size, as sorted tuples in lexicographic order.

    Bron-Kerbosch with pivoting, pruned against the best size found so far.
    Runs on an explicit stack; a frame whose last branch has been taken is
    dropped before its child is pushed so long clique chains stay shallow.
    """
    if g.n == 0:
        return []
    adj = g.adj
    deg = [len(a) for a in adj]
    best = 0
    found: list[frozenset[int]] = []

    def branches(P: set[int], X: set[int]) -> list[int]:
        if len(P) + len(X) <= 64:
            u = max(P | X, key=lambda w: (len(P & adj[w]), -w))
        else:
            # exact pivot choice is quadratic per level; approximate by degree
            u = max(P | X, key=lambda w: (deg[w], -w))
        return sorted(P - adj[u], key=lambda w: (-deg[w], w))

    root_P = set(range(g.n))
    stack = [(frozenset(), root_P, set(), branches(root_P, set()), [0])]
    while stack:
        R, P, X, todo, pos = stack[-1]
        if pos[0] >= len(todo) or len(R) + len(P) < best:
            stack.pop()
            continue
        v = todo[pos[0]]
        pos[0] += 1
        nv = adj[v]
        child_P = P & nv
        child_X = X & nv
        P.discard(v)
        X.add(v)
        if pos[0] >= len(todo):
            stack.pop()
        size = len(R) + 1
        if size + len(child_P) < best:
            continue
        if not child_P:
            if not child_X:
                clique = R | {v}
                if size > best:
                    best = size
                    found = [clique]
                elif size == best:
                    found.append(clique)
            continue
        stack.append((R | {v}, child_P, child_X, branches(child_P, child_X), [0]))
    return sorted(tuple(sorted(c)) for c in found)


def clique_number(g: Graph) -> int:
    cliques = maximum_cliques(g)
    return len(cliques[0]) if cliques else 0


def dominated(g: Graph, a: Iterable[int]) -> set[int]:
    out = set(a)
    for v in list(out):
        out |= g.adj[v]
    return out


def is_dominating(g: Graph, a: Iterable[int]) -> bool:
    return len(dominated(g, a)) == g.n


def is_weakly_dominating(g: Graph, a: Iterable[int]) -> bool:
    """Every edge has an endpoint in Dom(a), i.e. the undominated vertices are independent."""
    undominated = set(range(g.n))
    for v in a:
        undominated.discard(v)
        undominated -= g.adj[v]
        if not undominated:
            return True
    return all(not (g.adj[u] & undominated) for u in undominated)


def find_weakly_dominating_maximum_clique(g: Graph) -> tuple[int, ...]:
    if g.m == 0:
        raise ValueError("graph has no edges")
    cliques = maximum_cliques(g)
    for tried, q in enumerate(cliques, start=1):
        if is_weakly_dominating(g, q):
            if tried > 1:
                log.debug("weakly dominating maximum clique found after %d candidates", tried)
            return q
    raise NoWeaklyDominatingMaximumClique(
        f"none of the {len(cliques)} maximum cliques is weakly dominating"
    )


# ---------------------------------------------------------------------------
# toughness


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in a) for a in g.adj]


def _count_components(adjm: list[int], alive: int) -> int:
    count = 0
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adjm[low.bit_length() - 1]
                f ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        alive &= ~comp
        count += 1
    return count


def _independence_number(adjm: list[int], alive: int) -> int:
    if not alive:
        return 0
    low = alive & -alive
    v = low.bit_length() - 1
    without = _independence_number(adjm, alive & ~low)
    if not adjm[v] & alive:
        return without + 1
    return max(without, 1 + _independence_number(adjm, alive & ~low & ~adjm[v]))


def _subsets_of_size(n: int, k: int):
    if k == 0:
        yield 0
        return
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r


def _min_ratio(g: Graph, below: Fraction | None = None) -> tuple[Toughness, int | None]:
    """Minimum of |S| / Omega(G - S) and a minimising cut mask.

    With ``below`` set, stops at the first cut whose ratio is under it.
    """
    n = g.n
    adjm = _masks(g)
    full = (1 << n) - 1
    best: Toughness = INFINITE
    best_mask = None
    if n >= 2 and _count_components(adjm, full) > 1:
        return Fraction(0), 0
    alpha = _independence_number(adjm, full)
    for size in range(1, n - 1):
        # Omega(G - S) <= min(alpha, n - size) bounds every ratio at this size
        bound = Fraction(size, max(1, min(alpha, n - size)))
        if best is not INFINITE and bound >= best:
            break
        if below is not None and bound >= below:
            break
        for mask in _subsets_of_size(n, size):
            omega = _count_components(adjm, full & ~mask)
            if omega > 1:
                ratio = Fraction(size, omega)
                if ratio < best:
                    best, best_mask = ratio, mask
                    if below is not None and ratio < below:
                        return best, best_mask
    return best, best_mask


def toughness_exact(g: Graph, limit_n: int = 18) -> Toughness:
    """Exact toughness as a Fraction, or ``INFINITE`` when no cut disconnects ``g``.

    A disconnected graph has toughness 0 (the empty cut already disconnects it).
    """
    if g.n > limit_n:
        raise TooLarge(f"n={g.n} exceeds limit {limit_n}")
    return _min_ratio(g)[0]


def toughness_at_least(g: Graph, beta: Fraction | int, limit_n: int = 18) -> bool:
    """``toughness_exact(g) >= beta``, exiting early on the first cheaper cut."""
    if g.n > limit_n:
        raise TooLarge(f"n={g.n} exceeds limit {limit_n}")
    value, _ = _min_ratio(g, below=Fraction(beta))
    return value >= beta


def minimum_cut(g: Graph, limit_n: int = 18) -> tuple[Toughness, tuple[int, ...] | None]:
    """Toughness together with a cut set attaining it."""
    if g.n > limit_n:
        raise TooLarge(f"n={g.n} exceeds limit {limit_n}")
    value, mask = _min_ratio(g)
    if mask is None:
        return value, None
    return value, tuple(v for v in range(g.n) if mask >> v & 1)


def format_toughness(t: Toughness) -> str:
    if t == INFINITE:
        return "infinite"
    t = Fraction(t)
    return f"{t.numerator}/{t.denominator}"


# ---------------------------------------------------------------------------
# exact walk search


def hamiltonian_cycle_exact(g: Graph, limit_n: int = 24) -> Walk | None:
    """A Hamiltonian cycle of ``g`` or None if there is none.

    Backtracking from vertex 0 with two prunings: every unvisited vertex must
    keep two usable neighbours, and failed ``(end, visited)`` states are memoised.
    """
    n = g.n
    if n > limit_n:
        raise TooLarge(f"n={n} exceeds limit {limit_n}")
    if n < 3 or any(len(a) < 2 for a in g.adj):
        return None
    adjm = _masks(g)
    full = (1 << n) - 1
    failed: set[tuple[int, int]] = set()
    path = [0]

    def feasible(end: int, visited: int) -> bool:
        rest = full & ~visited
        ends = (1 << end) | 1
        r = rest
        while r:
            low = r & -r
            v = low.bit_length() - 1
            if (adjm[v] & (rest | ends)).bit_count() < 2:
                return False
            r ^= low
        return True

    def extend(end: int, visited: int) -> bool:
        if visited == full:
            return bool(adjm[end] & 1)
        if (end, visited) in failed or not feasible(end, visited):
            return False
        cand = adjm[end] & ~visited
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            path.append(w)
            if extend(w, visited | low):
                return True
            path.pop()
            cand ^= low
        failed.add((end, visited))
        return False

    if extend(0, 1):
        return Walk(path + [0])
    return None


def two_walk_exact(g: Graph, limit_n: int = 14) -> Walk | None:
    """A closed spanning walk visiting every vertex at most twice, or None.

    Depth-first over walks from vertex 0; states ``(current, visit counts)``
    that cannot be completed are memoised.
    """
    n = g.n
    if n > limit_n:
        raise TooLarge(f"n={n} exceeds limit {limit_n}")
    if n <= 1:
        return Walk(list(range(n)))
    adj = [sorted(a) for a in g.adj]
    pow3 = [3**i for i in range(n)]
    counts = [0] * n
    counts[0] = 1
    failed: set[tuple[int, int]] = set()
    path = [0]

    def code() -> int:
        return sum(c * p for c, p in zip(counts, pow3))

    def extend(cur: int, unvisited: int) -> bool:
        key = (cur, code())
        if key in failed:
            return False
        for w in adj[cur]:
            if w == 0 and unvisited == 0:
                path.append(0)
                return True
            if counts[w] < 2:
                counts[w] += 1
                path.append(w)
                if extend(w, unvisited - (counts[w] == 1)):
                    return True
                path.pop()
                counts[w] -= 1
        failed.add(key)
        return False

    if extend(0, n - 1):
        return Walk(path)
    return None

