"""Vertex-disjoint path covers and the exchange-move local searches over them.

A cover partitions the vertex set into paths of the host graph.  Two
objectives are used, both counting "awkward" path orders:

* ``objective_ld``: ``2 * #(1-paths) + #(3-paths)``
* ``objective_id``: ``4 * #(1- or 4-paths) + 3 * #(2- or 3-paths) + 2 * #(8- or 9-paths)``

:func:`normalize_ld` and :func:`normalize_id` split long paths and then apply
strictly improving exchange moves until none applies.  The resulting covers
are exactly what :mod:`girthcodes.constructions` needs to read off a code.
"""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidCoverError
from .graph import Graph

Path = tuple[int, ...]


@dataclass(frozen=True)
class PathCover:
    paths: tuple[Path, ...]
    n: int

    @classmethod
    def of(cls, paths: Sequence[Sequence[int]], n: int) -> PathCover:
        return cls(tuple(tuple(p) for p in paths), n)

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def alpha(self) -> Fraction:
        return Fraction(len(self.paths), self.n) if self.n else Fraction(0)

    def orders(self) -> list[int]:
        return [len(p) for p in self.paths]

    def order_counts(self) -> Counter:
        """``T_i`` sizes: number of paths of each exact order."""
        return Counter(self.orders())

    def residue_counts(self) -> list[int]:
        """``S_i`` sizes: number of paths with order congruent to ``i`` mod 5."""
        out = [0] * 5
        for r in self.orders():
            out[r % 5] += 1
        return out

    def canonical(self) -> PathCover:
        """Each path starts at its smaller endpoint; paths sorted by first vertex."""
        return PathCover(tuple(sorted(orient(p) for p in self.paths)), self.n)

    def stats(self) -> dict:
        counts = self.order_counts()
        return {
            "paths": len(self.paths),
            "alpha": str(self.alpha),
            "residue_counts": self.residue_counts(),
            "order_counts": {str(k): counts[k] for k in sorted(counts)},
        }


def orient(p: Sequence[int]) -> Path:
    p = tuple(p)
    return p if p[0] <= p[-1] else p[::-1]


def validate_cover(g: Graph, s: PathCover) -> tuple[bool, list[str]]:
    """Check that ``s`` partitions ``V(g)`` into paths of ``g``; returns diagnostics."""
    problems = []
    if s.n != g.n:
        problems.append(f"cover is for n={s.n}, graph has n={g.n}")
    seen: dict[int, int] = {}
    for i, p in enumerate(s.paths):
        if not p:
            problems.append(f"path {i} is empty")
        for v in p:
            if not 0 <= v < g.n:
                problems.append(f"path {i}: vertex {v} out of range")
            elif v in seen:
                problems.append(f"vertex {v} appears in paths {seen[v]} and {i}")
            else:
                seen[v] = i
        for a, b in zip(p, p[1:]):
            if 0 <= a < g.n and not g.has_edge(a, b):
                problems.append(f"path {i}: {a} and {b} are not adjacent")
    missing = [v for v in range(g.n) if v not in seen]
    if missing:
        problems.append(f"uncovered vertices {missing}")
    return not problems, problems


def require_valid_cover(g: Graph, s: PathCover) -> None:
    ok, problems = validate_cover(g, s)
    if not ok:
        raise InvalidCoverError("; ".join(problems))


# --- greedy construction ---------------------------------------------------


def _extend_tail(g: Graph, path: list[int], used: set[int]) -> None:
    """Extend at the tail by lowest-id free neighbours, rotating when stuck.

    A rotation at chord ``tail - path[i]`` reverses the segment after ``i`` so
    that ``path[i+1]`` becomes the tail; it is taken only if the new tail has a
    free neighbour, so each rotation is followed by growth.
    """
    while True:
        tail = path[-1]
        free = [w for w in g.adj[tail] if w not in used]
        if free:
            w = min(free)
            path.append(w)
            used.add(w)
            continue
        pos = {v: i for i, v in enumerate(path)}
        for w in sorted(g.adj[tail]):
            i = pos.get(w)
            if i is None or i >= len(path) - 2:
                continue
            new_tail = path[i + 1]
            if any(x not in used for x in g.adj[new_tail]):
                path[i + 1 :] = reversed(path[i + 1 :])
                break
        else:
            return


def _merge_endpoints(g: Graph, paths: list[list[int]]) -> bool:
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            p, q = paths[i], paths[j]
            for a in (p, p[::-1]):
                for b in (q, q[::-1]):
                    if g.has_edge(a[-1], b[0]):
                        paths[i] = a + b
                        del paths[j]
                        return True
    return False


def greedy_cover(g: Graph) -> PathCover:
    """Deterministic heuristic cover: greedy extension with rotations, then endpoint merges."""
    used: set[int] = set()
    paths: list[list[int]] = []
    for start in range(g.n):
        if start in used:
            continue
        path = [start]
        used.add(start)
        _extend_tail(g, path, used)
        path.reverse()
        _extend_tail(g, path, used)
        paths.append(path)
    while _merge_endpoints(g, paths):
        pass
    return PathCover.of(paths, g.n).canonical()


def random_cover(g: Graph, rng: random.Random, stop: float = 0.25) -> PathCover:
    """Random cover: random walks over unused vertices, each stopped with probability ``stop`` per step."""
    order = list(range(g.n))
    rng.shuffle(order)
    used: set[int] = set()
    paths = []
    for start in order:
        if start in used:
            continue
        path = [start]
        used.add(start)
        while rng.random() >= stop:
            free = sorted(w for w in g.adj[path[-1]] if w not in used)
            if not free:
                break
            w = rng.choice(free)
            path.append(w)
            used.add(w)
        paths.append(path)
    return PathCover.of(paths, g.n).canonical()


# --- objectives -------------------------------------------------------------

LD_WEIGHTS = {1: 2, 3: 1}
ID_WEIGHTS = {1: 4, 4: 4, 2: 3, 3: 3, 8: 2, 9: 2}


def _weighted(orders: Sequence[int], weights: dict[int, int]) -> int:
    return sum(weights.get(r, 0) for r in orders)


def objective_ld(s: PathCover | Sequence[int]) -> int:
    orders = s.orders() if isinstance(s, PathCover) else s
    return _weighted(orders, LD_WEIGHTS)


def objective_id(s: PathCover | Sequence[int]) -> int:
    orders = s.orders() if isinstance(s, PathCover) else s
    return _weighted(orders, ID_WEIGHTS)


# --- splitting rules --------------------------------------------------------

_LD_TAILS = {7: (5, 2), 8: (6, 2), 9: (5, 4), 10: (6, 4)}


def split_orders_ld(r: int) -> list[int]:
    """Piece orders for an ``r``-path: at most 6 each, never 1 or 3."""
    if r <= 6:
        return [r]
    pieces = []
    while r > 10:
        pieces.append(6)
        r -= 6
    pieces.extend(_LD_TAILS.get(r, (r,)))
    return pieces


_ID_HEADS = {0: (), 1: (6,), 2: (7,), 3: (6, 7), 4: (7, 7)}


def split_orders_id(r: int) -> list[int]:
    """Piece orders for an ``r``-path: one or two 6/7-paths by ``r mod 5``, the rest 5-paths."""
    if r < 10:
        return [r]
    head = list(_ID_HEADS[r % 5])
    return head + [5] * ((r - sum(head)) // 5)


def _cut(p: Sequence[int], sizes: Sequence[int]) -> list[list[int]]:
    out, i = [], 0
    for k in sizes:
        out.append(list(p[i : i + k]))
        i += k
    return out


# --- bad vertex types -------------------------------------------------------


def ld_pattern(r: int) -> tuple[int, ...]:
    """Positions of an ``r``-path chosen for the n/2 locating-dominating set (odd indices)."""
    return tuple(range(1, r, 2))


_ID_PATTERNS = {
    1: (),
    2: (1,),
    3: (1, 2),
    4: (0, 3),
    8: (1, 2, 3, 6, 7),
    9: (1, 2, 3, 4, 7, 8),
}


def id_pattern(r: int) -> tuple[int, ...]:
    """Positions of an ``r``-path (``r <= 9``) chosen for the 5n/7 identifying code."""
    if 5 <= r <= 7:
        return tuple(range(1, r - 1))
    return _ID_PATTERNS[r]


def vertex_type(r: int, i: int) -> tuple[int, int]:
    """``(p, q)`` with ``p <= q``: orders of the two pieces left when position ``i`` is removed."""
    a, b = i, r - 1 - i
    return (a, b) if a <= b else (b, a)


def bad_types(pattern: Callable[[int], tuple[int, ...]], max_order: int) -> frozenset[tuple[int, int]]:
    """Types ``(p, q)`` having some vertex, in some path orientation, outside ``pattern``."""
    bad = set()
    for r in range(1, max_order + 1):
        chosen = set(pattern(r))
        for i in range(r):
            if i not in chosen:
                bad.add(vertex_type(r, i))
    return frozenset(bad)


LD_BAD = bad_types(ld_pattern, 6)
ID_BAD = bad_types(id_pattern, 9)


# --- local search -----------------------------------------------------------


@dataclass(frozen=True)
class _Rules:
    max_order: int
    split: Callable[[int], list[int]]
    weights: dict[int, int]
    bad: frozenset[tuple[int, int]]
    movers: frozenset[int]
    merges: bool


_LD_RULES = _Rules(6, split_orders_ld, LD_WEIGHTS, LD_BAD, frozenset({1, 3}), False)
_ID_RULES = _Rules(9, split_orders_id, ID_WEIGHTS, ID_BAD, frozenset({1, 2, 3, 4, 8, 9}), True)


def _split_all(paths: list[list[int]], rules: _Rules) -> list[list[int]]:
    out = []
    for p in paths:
        out.extend(_cut(p, rules.split(len(p))))
    return out


def _cost(paths: Sequence[Sequence[int]], rules: _Rules) -> int:
    return _weighted([len(p) for p in paths], rules.weights)


def _exchange_options(p: list[int], e_first: bool, q: list[int], i: int) -> list[list[list[int]]]:
    """Ways to attach ``q[i]`` to endpoint ``e`` of ``p`` and keep a partition of ``p + q``."""
    a = p[::-1] if e_first else p
    return [
        [a + q[i:], q[:i]],
        [a + q[i::-1], q[i + 1 :]],
    ]


def _find_move(
    g: Graph, paths: list[list[int]], rules: _Rules
) -> tuple[int, int, list[list[int]]] | None:
    owner = {v: (k, i) for k, p in enumerate(paths) for i, v in enumerate(p)}
    order = sorted(range(len(paths)), key=lambda k: paths[k][0])
    for k in order:
        p = paths[k]
        r = len(p)
        if r not in rules.movers:
            continue
        ends = [(p[0], True)] if r == 1 else [(p[0], True), (p[-1], False)]
        before_p = _cost([p], rules)
        # exchange with a bad vertex of another path
        for e, e_first in ends:
            for w in sorted(g.adj[e]):
                j, i = owner[w]
                if j == k:
                    continue
                q = paths[j]
                if vertex_type(len(q), i) not in rules.bad:
                    continue
                before = before_p + _cost([q], rules)
                best = None
                for option in _exchange_options(p, e_first, q, i):
                    pieces = _split_all([x for x in option if x], rules)
                    cost = _cost(pieces, rules)
                    if cost < before and (best is None or cost < best[0]):
                        best = (cost, pieces)
                if best is not None:
                    return k, j, best[1]
        # endpoint-to-endpoint concatenation
        if not rules.merges:
            continue
        for e, e_first in ends:
            for w in sorted(g.adj[e]):
                j, i = owner[w]
                q = paths[j]
                if j == k or i not in (0, len(q) - 1):
                    continue
                a = p[::-1] if e_first else p
                b = q if i == 0 else q[::-1]
                pieces = _split_all([a + b], rules)
                if _cost(pieces, rules) < before_p + _cost([q], rules):
                    return k, j, pieces
    return None


def _local_search(g: Graph, s: PathCover, rules: _Rules) -> list[list[int]]:
    paths = [list(orient(p)) for p in _split_all([list(p) for p in s.paths], rules)]
    while (move := _find_move(g, paths, rules)) is not None:
        k, j, pieces = move
        paths = [p for t, p in enumerate(paths) if t not in (k, j)]
        paths.extend(list(orient(x)) for x in pieces)
    return paths


def normalize_ld(g: Graph, s: PathCover) -> PathCover:
    """Split paths to orders at most 6, then remove every 1-path or 3-path end
    adjacent to a vertex left outside the odd-index selection of its path,
    using exchanges that lower ``objective_ld``."""
    require_valid_cover(g, s)
    return PathCover.of(_local_search(g, s, _LD_RULES), g.n).canonical()


def _fix_long_cycle_ends(g: Graph, paths: list[list[int]]) -> None:
    """Orient 8-/9-paths so that the last vertex has a second code neighbour in the path
    or a neighbour outside it; rotate paths that close into a cycle."""
    for k, p in enumerate(paths):
        r = len(p)
        if r not in (8, 9):
            continue
        inside = set(p)
        if _end_ok(g, p, inside):
            continue
        if _end_ok(g, p[::-1], inside):
            paths[k] = p[::-1]
            continue
        if not g.has_edge(p[0], p[-1]):
            continue
        for shift in range(r):
            for rot in (p[shift:] + p[:shift], (p[shift:] + p[:shift])[::-1]):
                if any(w not in inside for w in g.adj[rot[-1]]):
                    paths[k] = rot
                    break
            else:
                continue
            break


def _end_ok(g: Graph, p: Sequence[int], inside: set[int]) -> bool:
    r = len(p)
    code = {p[i] for i in id_pattern(r)}
    last = p[-1]
    for w in g.adj[last]:
        if w not in inside or (w in code and w != p[-2]):
            return True
    return False


def is_isolated_cycle(g: Graph, p: Sequence[int]) -> bool:
    """True if the path's vertices form a whole component of ``g`` that is a cycle."""
    return len(p) >= 3 and g.has_edge(p[0], p[-1]) and all(g.degree(v) == 2 for v in p)


def normalize_id(g: Graph, s: PathCover) -> PathCover:
    """Split paths to orders at most 9, then apply the exchange and concatenation
    moves that lower ``objective_id`` until none applies; 8- and 9-paths are
    finally oriented (or rotated along their cycle) so their last vertex is
    not a pendant code vertex.

    The returned paths keep the orientation chosen here; they are sorted by
    first vertex but 8-/9-paths are not re-oriented by endpoint id.
    """
    require_valid_cover(g, s)
    paths = _local_search(g, s, _ID_RULES)
    while True:
        # reorienting may expose new improving moves; each extra round lowers the objective
        _fix_long_cycle_ends(g, paths)
        if _find_move(g, paths, _ID_RULES) is None:
            break
        paths = _local_search(g, PathCover.of(paths, g.n), _ID_RULES)
    paths.sort(key=lambda p: min(p[0], p[-1]))
    return PathCover.of(paths, g.n)
