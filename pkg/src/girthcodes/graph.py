"""Simple undirected graphs on dense integer vertex ids, plus structural queries."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Hashable, Iterable
from functools import cached_property

from .errors import HypothesisError

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``labels`` optionally maps vertex ids back to the caller's original
    vertex names (see :meth:`from_labeled_edges`).
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge] = (),
        labels: tuple[Hashable, ...] | None = None,
    ) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.labels = labels

    @classmethod
    def from_labeled_edges(
        cls, edges: Iterable[tuple[Hashable, Hashable]], vertices: Iterable[Hashable] = ()
    ) -> Graph:
        """Build a graph from arbitrary vertex names, remapped to ids in first-seen order."""
        index: dict[Hashable, int] = {}
        for v in vertices:
            index.setdefault(v, len(index))
        pairs = []
        for a, b in edges:
            pairs.append((index.setdefault(a, len(index)), index.setdefault(b, len(index))))
        labels = tuple(sorted(index, key=index.__getitem__))
        return cls(len(index), pairs, labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        """Bitmask of N(v) for each vertex."""
        return tuple(sum(1 << w for w in a) for a in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of N[v] for each vertex."""
        return tuple(m | (1 << v) for v, m in enumerate(self.open_masks))

    @cached_property
    def girth(self) -> int | float:
        return _shortest_cycle(self)

    @cached_property
    def twins(self) -> tuple[int, int] | None:
        return _first_twins(self)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        return induced_components(self, range(self.n))

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def subgraph_without(self, removed: Iterable[int]) -> Graph:
        """Induced subgraph on the remaining vertices, relabelled in increasing order."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(keep), edges)


def induced_components(g: Graph, vertices: Iterable[int]) -> list[list[int]]:
    """Connected components of the subgraph induced by ``vertices``."""
    inside = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(inside):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _shortest_cycle(g: Graph) -> int | float:
    # BFS from every root; a non-tree edge (u, w) closes a walk of length
    # dist[u] + dist[w] + 1 which contains a cycle at most that long, and the
    # minimum over all roots is exact.
    best: int | float = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def _first_twins(g: Graph) -> tuple[int, int] | None:
    first: dict[int, int] = {}
    found = None
    for v, mask in enumerate(g.closed_masks):
        if mask in first:
            pair = (first[mask], v)
            if found is None or pair < found:
                found = pair
        else:
            first[mask] = v
    return found


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    return g.girth


def degree_profile(g: Graph) -> tuple[int, int, list[int]]:
    """``(min_degree, max_degree, degrees)``."""
    degrees = [len(a) for a in g.adj]
    return min(degrees, default=0), max(degrees, default=0), degrees


def find_twins(g: Graph) -> tuple[int, int] | None:
    """Lexicographically smallest pair of distinct vertices with equal closed neighbourhoods."""
    return g.twins


def is_identifiable(g: Graph) -> bool:
    return g.twins is None


def require_girth5(g: Graph) -> None:
    if g.girth < 5:
        raise HypothesisError("girth>=5", f"girth is {g.girth}")


def to_dot(g: Graph, highlight: Iterable[int] = (), name: str = "G") -> str:
    """Graphviz DOT text; ``highlight`` vertices are drawn filled black."""
    marked = set(highlight)
    lines = [f"graph {name} {{", "  node [shape=circle, label=\"\"];"]
    for v in range(g.n):
        label = v if g.labels is None else g.labels[v]
        style = ', style=filled, fillcolor=black, fontcolor=white' if v in marked else ""
        lines.append(f'  {v} [xlabel="{label}"{style}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
