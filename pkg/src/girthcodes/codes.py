"""Validators for dominating sets, locating-dominating sets and identifying codes.

Two families of checks are provided:

* definitional ones, which compare neighbourhood traces pairwise, and
* girth-5 ones, which only look at vertices dominated exactly once and at the
  components of the subgraph induced by the code.  They are linear after the
  domination counts and agree with the definitional checks on every graph of
  girth at least 5.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import HypothesisError, NotIdentifiableError
from .graph import Graph, induced_components, require_girth5

UNDOMINATED = "undominated-vertex"
UNSEPARATED = "unseparated-pair"
SIZE_TWO = "size-2-component"
COLLISION = "forced-collision"
TWINS = "twins"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": list(self.witness)}


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validator; truthy iff the set is valid.

    ``impossible`` marks identifying-code checks on graphs with twins, where no
    vertex set can ever be valid.
    """

    valid: bool
    violation: Violation | None = None
    impossible: bool = False

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "impossible": self.impossible,
            "violation": None if self.violation is None else self.violation.to_json(),
        }


OK = Verdict(True)


def vertex_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """Validate that ``members`` are vertex ids of ``g`` and freeze them."""
    s = frozenset(members)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return s


def domination_counts(g: Graph, code: frozenset[int]) -> list[int]:
    """For each vertex, how many code vertices dominate it, capped at 2."""
    counts = [0] * g.n
    for c in code:
        counts[c] = min(counts[c] + 1, 2)
        for w in g.adj[c]:
            counts[w] = min(counts[w] + 1, 2)
    return counts


def _first_undominated(g: Graph, code: frozenset[int]) -> int | None:
    for v in range(g.n):
        if v not in code and not (g.adj[v] & code):
            return v
    return None


def _first_collision(traces: Iterable[tuple[int, frozenset[int]]]) -> tuple[int, int] | None:
    first: dict[frozenset[int], int] = {}
    best = None
    for v, trace in traces:
        if trace in first:
            pair = (first[trace], v)
            if best is None or pair < best:
                best = pair
        else:
            first[trace] = v
    return best


def dominates(g: Graph, d: Iterable[int]) -> Verdict:
    d = vertex_set(g, d)
    v = _first_undominated(g, d)
    return OK if v is None else Verdict(False, Violation(UNDOMINATED, (v,)))


def is_locating_dominating(g: Graph, d: Iterable[int]) -> Verdict:
    """Dominating, and every two non-members have different neighbourhoods within ``d``."""
    d = vertex_set(g, d)
    v = _first_undominated(g, d)
    if v is not None:
        return Verdict(False, Violation(UNDOMINATED, (v,)))
    pair = _first_collision((u, g.adj[u] & d) for u in range(g.n) if u not in d)
    return OK if pair is None else Verdict(False, Violation(UNSEPARATED, pair))


def is_identifying_code(g: Graph, c: Iterable[int]) -> Verdict:
    """Dominating, and every two vertices have different closed neighbourhoods within ``c``."""
    c = vertex_set(g, c)
    if g.twins is not None:
        return Verdict(False, Violation(TWINS, g.twins), impossible=True)
    v = _first_undominated(g, c)
    if v is not None:
        return Verdict(False, Violation(UNDOMINATED, (v,)))
    pair = _first_collision((u, g.closed_neighborhood(u) & c) for u in range(g.n))
    return OK if pair is None else Verdict(False, Violation(UNSEPARATED, pair))


def unique_dominators(g: Graph, code: frozenset[int]) -> dict[int, int]:
    """Map each non-code vertex with exactly one code neighbour to that neighbour."""
    counts = domination_counts(g, code)
    forced = {}
    for x in range(g.n):
        if x not in code and counts[x] == 1:
            (forced[x],) = g.adj[x] & code
    return forced


def _injectivity(forced: dict[int, int]) -> Violation | None:
    seen: dict[int, int] = {}
    for x in sorted(forced):
        target = forced[x]
        if target in seen:
            return Violation(COLLISION, (seen[target], x))
        seen[target] = x
    return None


def is_ld_girth5(g: Graph, d: Iterable[int]) -> Verdict:
    """Locating-domination test valid on graphs of girth at least 5.

    ``d`` must dominate, and the vertices outside ``d`` with a single neighbour
    in ``d`` must all have different such neighbours.
    """
    require_girth5(g)
    d = vertex_set(g, d)
    counts = domination_counts(g, d)
    for v in range(g.n):
        if counts[v] == 0:
            return Verdict(False, Violation(UNDOMINATED, (v,)))
    bad = _injectivity(unique_dominators(g, d))
    return OK if bad is None else Verdict(False, bad)


def is_id_girth5(g: Graph, c: Iterable[int]) -> Verdict:
    """Identifying-code test valid on identifiable graphs of girth at least 5.

    Besides domination, no component of the code's induced subgraph may have
    exactly two vertices, and each vertex outside the code with a single code
    neighbour needs that neighbour in a component of order at least 3, with
    all such neighbours distinct.
    """
    require_girth5(g)
    if g.twins is not None:
        raise NotIdentifiableError(g.twins)
    c = vertex_set(g, c)
    counts = domination_counts(g, c)
    for v in range(g.n):
        if counts[v] == 0:
            return Verdict(False, Violation(UNDOMINATED, (v,)))
    size = {}
    for comp in induced_components(g, c):
        if len(comp) == 2:
            return Verdict(False, Violation(SIZE_TWO, tuple(comp)))
        for v in comp:
            size[v] = len(comp)
    forced = unique_dominators(g, c)
    for x in sorted(forced):
        if size[forced[x]] < 3:
            return Verdict(False, Violation(UNSEPARATED, tuple(sorted((x, forced[x])))))
    bad = _injectivity(forced)
    return OK if bad is None else Verdict(False, bad)


VALIDATORS = {
    "dom": dominates,
    "ld": is_locating_dominating,
    "id": is_identifying_code,
}


def validate(g: Graph, mode: str, members: Iterable[int]) -> Verdict:
    try:
        check = VALIDATORS[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None
    return check(g, members)


def fast_validate(g: Graph, mode: str, members: Iterable[int]) -> Verdict:
    """Use the girth-5 characterisations when they apply, else the definitions."""
    if mode == "dom" or g.girth < 5 or (mode == "id" and g.twins is not None):
        return validate(g, mode, members)
    return is_ld_girth5(g, members) if mode == "ld" else is_id_girth5(g, members)


__all__ = [
    "Violation",
    "Verdict",
    "HypothesisError",
    "dominates",
    "is_locating_dominating",
    "is_identifying_code",
    "is_ld_girth5",
    "is_id_girth5",
    "domination_counts",
    "unique_dominators",
    "validate",
    "fast_validate",
    "vertex_set",
]
