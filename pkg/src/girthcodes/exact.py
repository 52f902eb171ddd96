"""Exact minimum dominating sets, locating-dominating sets and identifying codes.

Each problem is a minimum hitting set over vertex bitmasks:

* dom: every closed neighbourhood N[v] must be hit;
* ld:  additionally, for u < v, the set {u, v} | (N(u) ^ N(v)) must be hit
  (either endpoint is in the set, or some member separates them);
* id:  additionally, N[u] ^ N[v] must be hit for every pair u < v.

The search is iterative deepening on the target size, starting from the
degree-based lower bounds, with branching on the unhit constraint that has
fewest admissible vertices and a disjoint-constraint packing bound.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations

from . import codes
from .graph import Graph

MODES = ("dom", "ld", "id")


@dataclass(frozen=True)
class SolveResult:
    mode: str
    optimum: int | None
    witness: frozenset[int] | None
    lower_bound: int
    upper_bound: int | None
    proved: bool
    nodes_expanded: int
    elapsed: float = 0.0
    identifiable: bool = True

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "optimum": self.optimum if self.proved else None,
            "witness": None if self.witness is None else sorted(self.witness),
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "proved": self.proved,
            "nodes_expanded": self.nodes_expanded,
            "identifiable": self.identifiable,
        }


class _Timeout(Exception):
    pass


def constraints(g: Graph, mode: str) -> list[int]:
    """Minimal hitting-set constraints, sorted by (popcount, mask)."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    cons = set(g.closed_masks)
    if mode != "dom":
        for u, v in combinations(range(g.n), 2):
            if mode == "ld":
                cons.add((1 << u) | (1 << v) | (g.open_masks[u] ^ g.open_masks[v]))
            else:
                cons.add(g.closed_masks[u] ^ g.closed_masks[v])
    ordered = sorted(cons, key=lambda c: (c.bit_count(), c))
    minimal: list[int] = []
    for c in ordered:
        if not any(m & c == m for m in minimal):
            minimal.append(c)
    return minimal


def analytic_lower_bound(g: Graph, mode: str) -> int:
    if g.n == 0:
        return 0
    d = g.max_degree()
    lb = -(-g.n // (d + 1))
    if mode == "ld":
        lb = max(lb, -(-2 * g.n // (d + 3)))
    elif mode == "id":
        lb = max(lb, -(-2 * g.n // (d + 2)))
    return lb


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy(n: int, cons: list[int]) -> int:
    chosen = 0
    remaining = list(cons)
    while remaining:
        best, score = -1, -1
        for v in range(n):
            b = 1 << v
            s = sum(1 for c in remaining if c & b)
            if s > score:
                best, score = v, s
        chosen |= 1 << best
        remaining = [c for c in remaining if not c & chosen]
    return chosen


def _packing(cons: list[int], ban: int) -> int:
    used, count = 0, 0
    for c in sorted(cons, key=lambda c: (c & ~ban).bit_count()):
        a = c & ~ban
        if not a & used:
            used |= a
            count += 1
    return count


class _Search:
    def __init__(self, deadline: float | None):
        self.deadline = deadline
        self.nodes = 0

    def run(self, cons: list[int], sel: int, ban: int, budget: int) -> int | None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _Timeout
        if not cons:
            return sel
        if budget == 0:
            return None
        pick, fewest = 0, math.inf
        for c in cons:
            k = (c & ~ban).bit_count()
            if k < fewest:
                pick, fewest = c, k
                if k <= 1:
                    break
        if fewest == 0 or _packing(cons, ban) > budget:
            return None
        for v in _bits(pick & ~ban):
            b = 1 << v
            found = self.run([c for c in cons if not c & b], sel | b, ban, budget - 1)
            if found is not None:
                return found
            ban |= b
        return None


def _to_set(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def solve(g: Graph, mode: str, timeout: float | None = None) -> SolveResult:
    """Minimum set for ``mode``; on timeout returns the best known bounds with ``proved=False``."""
    start = time.monotonic()
    if mode == "id" and g.twins is not None:
        return SolveResult(mode, None, None, 0, None, True, 0, 0.0, identifiable=False)
    cons = constraints(g, mode)
    upper = _greedy(g.n, cons)
    k = max(analytic_lower_bound(g, mode), _packing(cons, 0))
    search = _Search(None if timeout is None else start + timeout)
    found = None
    try:
        while found is None:
            found = search.run(cons, 0, 0, k)
            if found is None:
                k += 1
    except _Timeout:
        best = upper.bit_count()
        return SolveResult(
            mode, best, _to_set(upper), k, best, best == k,
            search.nodes, time.monotonic() - start,
        )
    size = found.bit_count()
    return SolveResult(mode, size, _to_set(found), size, size, True, search.nodes, time.monotonic() - start)


def min_dominating(g: Graph, timeout: float | None = None) -> SolveResult:
    return solve(g, "dom", timeout)


def min_locating_dominating(g: Graph, timeout: float | None = None) -> SolveResult:
    return solve(g, "ld", timeout)


def min_identifying_code(g: Graph, timeout: float | None = None) -> SolveResult:
    return solve(g, "id", timeout)


def naive_minimum(g: Graph, mode: str) -> tuple[int, frozenset[int]] | None:
    """Smallest valid set by trying every subset in order of size; None if no identifying code exists."""
    if mode == "id" and g.twins is not None:
        return None
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if codes.validate(g, mode, subset):
                return k, frozenset(subset)
    raise AssertionError("the full vertex set is always valid")
