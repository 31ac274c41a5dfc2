"""Simple undirected graphs on dense integer vertex ids.

Vertices are always 0..n-1 and edges are unordered pairs stored in (min, max)
form, so two graphs are equal exactly when they have the same order and the
same edge set under identical numbering.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to (min, max) form."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``n`` vertices plus a set of unordered edges."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = frozenset(edge(u, v) for u, v in self.edges)
        for u, v in norm:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        object.__setattr__(self, "edges", norm)

    @cached_property
    def _adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as integer bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("min_degree undefined for the empty graph")
        return min(len(b) for b in self._adj)

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def component_labels(self) -> list[int]:
        """Label each vertex with the index of its connected component."""
        labels = [-1] * self.n
        comp = 0
        for start in range(self.n):
            if labels[start] != -1:
                continue
            labels[start] = comp
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if labels[w] == -1:
                        labels[w] = comp
                        queue.append(w)
            comp += 1
        return labels

    def component_count(self) -> int:
        labels = self.component_labels()
        return max(labels) + 1 if labels else 0

    def is_connected(self) -> bool:
        """One traversal from vertex 0 reaches everything. K_1 is connected."""
        if self.n == 0:
            raise ValueError("connectivity undefined for the empty graph")
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def is_bipartite(self) -> bool:
        """Proper 2-colorability, decided per connected component."""
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True


def remove_edges(g: Graph, cut: Iterable[Edge]) -> Graph:
    """Copy of ``g`` with the given edges deleted (each must exist)."""
    cut = frozenset(edge(u, v) for u, v in cut)
    missing = cut - g.edges
    if missing:
        raise ValueError(f"edges not in graph: {sorted(missing)}")
    return Graph(g.n, g.edges - cut)


def complement(g: Graph) -> Graph:
    pairs = {
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    }
    return Graph(g.n, pairs)


# ---------------------------------------------------------------------------
# Named constructions.

def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty_graph requires n >= 1")
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph requires n >= 1")
    return Graph(n, {(u, v) for u in range(n) for v in range(u + 1, n)})


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph requires n >= 1")
    return Graph(n, {(i, i + 1) for i in range(n - 1)})


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph requires n >= 3")
    return Graph(n, {(i, (i + 1) % n) for i in range(n)})


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite_graph requires both parts nonempty")
    return Graph(a + b, {(i, a + j) for i in range(a) for j in range(b)})


def matching_graph(l: int) -> Graph:
    """l disjoint edges on 2l vertices: (0,1), (2,3), ..."""
    if l < 1:
        raise ValueError("matching_graph requires l >= 1")
    return Graph(2 * l, {(2 * i, 2 * i + 1) for i in range(l)})


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = {(u + g.n, v + g.n) for u, v in h.edges}
    return Graph(g.n + h.n, set(g.edges) | shifted)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of g and h plus every edge between the two sides."""
    base = disjoint_union(g, h)
    cross = {(u, g.n + w) for u in range(g.n) for w in range(h.n)}
    return Graph(base.n, set(base.edges) | cross)


# ---------------------------------------------------------------------------
# Declarative family specs, so corpora and CLI inputs can name constructions.

Param = Union[int, "GraphFamilySpec"]

_INT_KINDS = {
    "Complete": 1,
    "Cycle": 1,
    "Path": 1,
    "EmptyGraph": 1,
    "CompleteBipartite": 2,
    "Matching": 1,
}
_SPEC_KINDS = {"Join": 2, "DisjointUnion": 2}


@dataclass(frozen=True)
class GraphFamilySpec:
    """Name of a construction plus its parameters.

    Integer-parameter kinds: Complete, Cycle, Path, EmptyGraph,
    CompleteBipartite, Matching.  Composite kinds Join and DisjointUnion take
    two nested specs.
    """

    kind: str
    params: tuple[Param, ...]

    def __post_init__(self) -> None:
        if self.kind in _INT_KINDS:
            arity = _INT_KINDS[self.kind]
            if len(self.params) != arity or not all(
                isinstance(p, int) and p > 0 for p in self.params
            ):
                raise ValueError(
                    f"{self.kind} takes {arity} positive integer parameter(s)"
                )
        elif self.kind in _SPEC_KINDS:
            if len(self.params) != 2 or not all(
                isinstance(p, GraphFamilySpec) for p in self.params
            ):
                raise ValueError(f"{self.kind} takes two nested specs")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")


def build(spec: GraphFamilySpec) -> Graph:
    """Materialize a family spec as a concrete graph."""
    kind, params = spec.kind, spec.params
    if kind == "Complete":
        return complete_graph(params[0])
    if kind == "Cycle":
        return cycle_graph(params[0])
    if kind == "Path":
        return path_graph(params[0])
    if kind == "EmptyGraph":
        return empty_graph(params[0])
    if kind == "CompleteBipartite":
        return complete_bipartite_graph(params[0], params[1])
    if kind == "Matching":
        return matching_graph(params[0])
    if kind == "Join":
        return join(build(params[0]), build(params[1]))
    if kind == "DisjointUnion":
        return disjoint_union(build(params[0]), build(params[1]))
    raise ValueError(f"unknown family kind {kind!r}")
