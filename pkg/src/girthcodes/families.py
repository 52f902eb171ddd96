"""Named graphs with fixed labelings, and a random girth-5 sampler."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph

# Hamiltonian path 0-1-...-9 plus the remaining six edges of the drawn Petersen graph.
PETERSEN_EXTRA_EDGES = ((1, 9), (0, 7), (2, 6), (3, 8), (0, 4), (5, 9))
HEAWOOD_CHORDS = ((0, 5), (1, 10), (2, 7), (3, 12), (4, 9), (6, 11), (8, 13))
G12_CHORDS = ((0, 4), (1, 8), (2, 6), (3, 10), (5, 9), (7, 11))


def _path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, _path_edges(n) + [(n - 1, 0)])


def path(n: int) -> Graph:
    return Graph(n, _path_edges(n))


def star(leaves: int) -> Graph:
    """Hub 0 joined to leaves ``1..leaves``."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def flower(core: int, k: int) -> Graph:
    """Hub 0 joined by one edge to the first vertex of each of ``k`` disjoint ``core``-cycles."""
    if core not in (5, 6):
        raise ValueError("flower core must be 5 or 6")
    if k < 2:
        raise ValueError("flower needs k >= 2 petals")
    edges = []
    for b in range(k):
        start = 1 + b * core
        edges.append((0, start))
        for i in range(core):
            edges.append((start + i, start + (i + 1) % core))
    return Graph(1 + core * k, edges)


def _self_check(g: Graph, name: str, degree: int, girth: int) -> Graph:
    if g.min_degree() != degree or g.max_degree() != degree or g.girth != girth:
        raise AssertionError(f"{name} labeling is wrong")
    return g


def petersen() -> Graph:
    g = Graph(10, _path_edges(10) + list(PETERSEN_EXTRA_EDGES))
    if not g.has_edge(1, 9):
        raise AssertionError("petersen labeling is wrong")
    return _self_check(g, "petersen", 3, 5)


P11_X = 10


def p11() -> Graph:
    """Petersen graph with edge {0,1} subdivided by the new vertex ``x`` = 10."""
    edges = [e for e in petersen().edges() if e != (0, 1)]
    return Graph(11, edges + [(0, P11_X), (P11_X, 1)])


def g11(k: int) -> Graph:
    """Vertex ``y`` = 0 joined to the ``x`` vertex of each of ``k`` copies of P11.

    Copy ``c`` occupies ids ``1 + 11c .. 11 + 11c``; P11 vertex ``i`` maps to
    ``1 + 11c + i`` (so the copy's ``x`` is ``11 + 11c``).
    """
    if k < 2:
        raise ValueError("g11 needs k >= 2 copies")
    base = p11().edges()
    edges = []
    for c in range(k):
        off = 1 + 11 * c
        edges.extend((u + off, v + off) for u, v in base)
        edges.append((0, P11_X + off))
    return Graph(1 + 11 * k, edges)


def g11_vertex(copy: int, label: int | str) -> int:
    """Id in :func:`g11` of P11 vertex ``label`` (0..9 or ``"x"``) in copy ``copy``."""
    i = P11_X if label == "x" else int(label)
    return 1 + 11 * copy + i


def heawood() -> Graph:
    return _self_check(Graph(14, _path_edges(14) + [(13, 0)] + list(HEAWOOD_CHORDS)), "heawood", 3, 6)


def g12() -> Graph:
    return _self_check(Graph(12, _path_edges(12) + [(11, 0)] + list(G12_CHORDS)), "g12", 3, 5)


def _within_distance(adj: list[set[int]], u: int, v: int, limit: int) -> bool:
    frontier, seen = {u}, {u}
    for _ in range(limit):
        frontier = {w for x in frontier for w in adj[x]} - seen
        if v in frontier:
            return True
        seen |= frontier
    return False


def _short_cycle_edges(adj: list[set[int]]) -> list[tuple[int, int]]:
    """Edges lying on a 3- or 4-cycle."""
    found = []
    for u in range(len(adj)):
        for v in sorted(adj[u]):
            if u < v:
                adj[u].discard(v)
                adj[v].discard(u)
                if _within_distance(adj, u, v, 3):
                    found.append((u, v))
                adj[u].add(v)
                adj[v].add(u)
    return found


def random_girth5_graph(
    n: int,
    rng: random.Random,
    p: float | None = None,
    min_degree: int = 0,
    saturate: bool = False,
    max_tries: int = 1000,
) -> Graph:
    """Sample a graph of girth at least 5.

    Draws G(n, p), deletes a random edge of some 3- or 4-cycle until none is
    left, optionally adds random edges that keep the girth at least 5 until the
    graph is maximal, and rejects samples whose minimum degree is too small.
    """
    if p is None:
        p = min(1.0, 3.0 / max(n - 1, 1))
    for _ in range(max_tries):
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in combinations(range(n), 2):
            if rng.random() < p:
                adj[u].add(v)
                adj[v].add(u)
        while short := _short_cycle_edges(adj):
            u, v = rng.choice(short)
            adj[u].discard(v)
            adj[v].discard(u)
        if saturate:
            pairs = [(u, v) for u, v in combinations(range(n), 2) if v not in adj[u]]
            rng.shuffle(pairs)
            for u, v in pairs:
                if v not in adj[u] and not _within_distance(adj, u, v, 3):
                    adj[u].add(v)
                    adj[v].add(u)
        if min((len(a) for a in adj), default=0) >= min_degree:
            return Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
    raise RuntimeError(f"no girth-5 sample with min degree {min_degree} after {max_tries} tries")


FAMILIES = ("cycle", "path", "star", "flower5", "flower6", "petersen", "p11", "g11", "heawood", "g12", "random")
