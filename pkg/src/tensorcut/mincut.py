"""Exact edge connectivity and bounded exhaustive enumeration of minimum cuts.

Two independent routes to kappa': unit-capacity max-flow over all sinks, and
a budgeted brute-force scan of edge subsets.  The scan is the ground-truth
oracle for structural claims about minimum cuts, so it stays assumption-free:
every k-subset is tested for disconnection (in vectorized batches), except
subsets that touch no spanning-tree edge, which provably cannot disconnect.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Iterable, Iterator, Optional

import numpy as np

from .graphs import Edge, Graph, edge

DEFAULT_BUDGET = 5_000_000
_BATCH = 32768


class BudgetExceeded(Exception):
    """The requested exhaustive scan would test more subsets than allowed."""


@dataclass(frozen=True)
class MinCutResult:
    """kappa' plus one witnessing minimum cut and its vertex bipartition."""

    value: int
    witness: frozenset[Edge]
    partition: tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class CutEnumeration:
    """All minimum cuts when ``exhaustive``; otherwise the ones found."""

    cuts: tuple[frozenset[Edge], ...]
    exhaustive: bool


def _adjacency(g: Graph) -> list[list[int]]:
    return [list(g.neighbors(v)) for v in range(g.n)]


def _unit_max_flow(
    adj: list[list[int]], s: int, t: int, limit: Optional[int] = None
) -> tuple[int, Optional[set[int]]]:
    """Edmonds-Karp with capacity 1 per direction on every edge.

    Returns (flow, source-side reachable set).  When ``limit`` is given the
    search aborts as soon as the flow reaches it and the reachable set is None.
    """
    n = len(adj)
    cap = [dict.fromkeys(nbrs, 1) for nbrs in adj]
    flow = 0
    while limit is None or flow < limit:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] == -1:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and parent[w] == -1:
                    parent[w] = u
                    queue.append(w)
        if parent[t] == -1:
            return flow, {v for v in range(n) if parent[v] != -1}
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] = cap[v].get(u, 0) + 1
            v = u
        flow += 1
    return flow, None


def _boundary(g: Graph, side: set[int] | frozenset[int]) -> frozenset[Edge]:
    return frozenset(e for e in g.edges if (e[0] in side) != (e[1] in side))


def edge_connectivity(g: Graph) -> MinCutResult:
    """Exact kappa' via max-flow from vertex 0 to every other sink.

    Ties between sinks break toward the smallest sink id, so the witness is
    deterministic.  Disconnected graphs get value 0 with an empty witness.
    """
    if g.n < 2:
        raise ValueError("edge connectivity requires at least two vertices")
    vertices = frozenset(range(g.n))
    if not g.is_connected():
        labels = g.component_labels()
        side = frozenset(v for v in range(g.n) if labels[v] == labels[0])
        return MinCutResult(0, frozenset(), (side, vertices - side))
    adj = _adjacency(g)
    best: Optional[int] = None
    best_t = 1
    for t in range(1, g.n):
        val, _ = _unit_max_flow(adj, 0, t, limit=best)
        if best is None or val < best:
            best, best_t = val, t
    assert best is not None
    _, reach = _unit_max_flow(adj, 0, best_t)
    assert reach is not None
    side = frozenset(reach)
    witness = _boundary(g, side)
    assert len(witness) == best
    return MinCutResult(best, witness, (side, vertices - side))


# ---------------------------------------------------------------------------
# Exhaustive subset scanning.

def _scan_order(g: Graph) -> tuple[list[Edge], int]:
    """Edges with a BFS spanning forest first; returns (order, forest size).

    Subsets disjoint from the forest leave it intact and cannot disconnect,
    and in lexicographic combination order they form a contiguous tail.
    """
    seen = [False] * g.n
    forest: list[Edge] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    forest.append(edge(u, w))
                    queue.append(w)
    rest = sorted(g.edges - set(forest))
    return forest + rest, len(forest)


def _disconnecting_subsets(
    g: Graph, k: int, order: list[Edge], tree_size: int
) -> Iterator[tuple[int, ...]]:
    """Yield index k-subsets of ``order`` whose removal disconnects g."""
    if k == 0:
        return
    n = g.n
    base = np.zeros((n, n), dtype=bool)
    for u, v in order:
        base[u, v] = base[v, u] = True
    eu = np.array([e[0] for e in order])
    ev = np.array([e[1] for e in order])

    gen = combinations(range(len(order)), k)
    done = False
    while not done:
        chunk = list(islice(gen, _BATCH))
        if not chunk:
            break
        if chunk[0][0] >= tree_size:
            break
        if chunk[-1][0] >= tree_size:
            chunk = [c for c in chunk if c[0] < tree_size]
            done = True

        idx = np.array(chunk, dtype=np.intp)
        b = len(chunk)
        adj = np.broadcast_to(base, (b, n, n)).copy()
        rows = np.arange(b)[:, None]
        adj[rows, eu[idx], ev[idx]] = False
        adj[rows, ev[idx], eu[idx]] = False

        reach = np.zeros((b, n), dtype=bool)
        reach[:, 0] = True
        while True:
            step = (adj & reach[:, None, :]).any(axis=2)
            grow = step & ~reach
            if not grow.any():
                break
            reach |= grow
        for i in np.flatnonzero(~reach.all(axis=1)):
            yield chunk[i]


def edge_connectivity_subset(g: Graph, budget: int = DEFAULT_BUDGET) -> MinCutResult:
    """kappa' by brute force: scan subsets of increasing size up to min degree.

    Independent of the max-flow route.  Raises BudgetExceeded before starting
    any level that would push the total subset count past the budget.
    """
    if g.n < 2:
        raise ValueError("edge connectivity requires at least two vertices")
    vertices = frozenset(range(g.n))
    if not g.is_connected():
        labels = g.component_labels()
        side = frozenset(v for v in range(g.n) if labels[v] == labels[0])
        return MinCutResult(0, frozenset(), (side, vertices - side))
    order, tree_size = _scan_order(g)
    m = len(order)
    spent = 1
    for k in range(1, g.min_degree() + 1):
        spent += math.comb(m, k)
        if spent > budget:
            raise BudgetExceeded(
                f"subset search would test {spent} subsets (budget {budget})"
            )
        for combo in _disconnecting_subsets(g, k, order, tree_size):
            witness = frozenset(order[i] for i in combo)
            labels = Graph(g.n, g.edges - witness).component_labels()
            side = frozenset(v for v in range(g.n) if labels[v] == labels[0])
            return MinCutResult(k, witness, (side, vertices - side))
    raise AssertionError("removing a minimum-degree star must disconnect")


def enumerate_min_cuts(g: Graph, budget: int = DEFAULT_BUDGET) -> CutEnumeration:
    """All minimum edge cuts, exhaustively when C(|E|, kappa') fits the budget.

    Above budget, falls back to the distinct witnesses of all-pairs max-flow
    and reports the enumeration as non-exhaustive.
    """
    if g.n < 2 or not g.is_connected():
        raise ValueError("minimum-cut enumeration requires a connected graph")
    value = edge_connectivity(g).value
    m = len(g.edges)
    if math.comb(m, value) <= budget:
        order, tree_size = _scan_order(g)
        cuts = {
            frozenset(order[i] for i in combo)
            for combo in _disconnecting_subsets(g, value, order, tree_size)
        }
        return CutEnumeration(tuple(sorted(cuts, key=sorted)), True)

    adj = _adjacency(g)
    found = set()
    for s in range(g.n):
        for t in range(s + 1, g.n):
            val, reach = _unit_max_flow(adj, s, t, limit=value + 1)
            if reach is not None and val == value:
                found.add(_boundary(g, reach))
    return CutEnumeration(tuple(sorted(found, key=sorted)), False)


def is_vertex_star(g: Graph, cut: Iterable[Edge]) -> Optional[int]:
    """The vertex whose full incident edge set equals the cut, if any."""
    norm = frozenset(edge(u, v) for u, v in cut)
    stray = norm - g.edges
    if stray:
        raise ValueError(f"cut edges not in graph: {sorted(stray)}")
    if not norm:
        return None
    it = iter(norm)
    common = set(next(it))
    for e in it:
        common &= set(e)
    for v in sorted(common):
        if norm == frozenset(edge(v, w) for w in g.neighbors(v)):
            return v
    return None


def is_super_edge_connected(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Definitional check: every minimum edge cut is a vertex star.

    Sound only when enumeration is exhaustive; otherwise BudgetExceeded is
    raised rather than returning a potentially unsound False.
    """
    enum = enumerate_min_cuts(g, budget)
    if not enum.exhaustive:
        raise BudgetExceeded(
            "minimum-cut enumeration did not fit the budget; result would be unsound"
        )
    return all(is_vertex_star(g, c) is not None for c in enum.cuts)


# ---------------------------------------------------------------------------
# Plain-graph cut text format: space-separated "u-v" tokens on one line.

def format_cut(cut: Iterable[Edge]) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(edge(u, v) for u, v in cut))


def parse_cut(text: str) -> frozenset[Edge]:
    out = set()
    for token in text.split():
        try:
            u, v = (int(p) for p in token.split("-"))
        except ValueError as exc:
            raise ValueError(f"bad cut token {token!r}") from exc
        out.add(edge(u, v))
    return frozenset(out)
