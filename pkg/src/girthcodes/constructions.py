"""Locating-dominating sets and identifying codes read off vertex-disjoint path covers."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from . import codes
from .errors import NotIdentifiableError
from .graph import Graph, induced_components, require_girth5
from .pathcover import (
    PathCover,
    greedy_cover,
    id_pattern,
    is_isolated_cycle,
    ld_pattern,
    normalize_id,
    normalize_ld,
    require_valid_cover,
)


@dataclass
class ConstructionResult:
    code: frozenset[int]
    method: str
    cover: PathCover
    bound_claim: Fraction
    hypotheses_met: bool
    repaired: bool = False
    valid: bool = True
    # the injective map onto code vertices used to certify the set (vertex -> dominator)
    assignment: dict[int, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.code)

    def within_bound(self) -> bool:
        return self.size <= self.bound_claim

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "code": sorted(self.code),
            "size": self.size,
            "bound": str(self.bound_claim),
            "alpha": str(self.cover.alpha),
            "cover": self.cover.stats(),
            "hypotheses_met": self.hypotheses_met,
            "valid": self.valid,
            "repaired": self.repaired,
            "notes": self.notes,
        }


def verify_or_repair(g: Graph, candidate: Iterable[int], mode: str) -> frozenset[int]:
    """Return ``candidate`` if valid, else add lowest-id vertices fixing the first violation until valid."""
    if mode == "id" and g.twins is not None:
        raise NotIdentifiableError(g.twins)
    code = set(codes.vertex_set(g, candidate))
    while not (verdict := codes.validate(g, mode, code)):
        kind, w = verdict.violation.kind, verdict.violation.witness
        if kind == codes.UNDOMINATED:
            fix = g.closed_neighborhood(w[0])
        elif mode == "id":
            fix = g.closed_neighborhood(w[0]) ^ g.closed_neighborhood(w[1])
        else:
            fix = (g.adj[w[0]] ^ g.adj[w[1]]) | set(w)
        code.add(min(fix - code))
    return frozenset(code)


def _finish(g: Graph, result: ConstructionResult, mode: str) -> ConstructionResult:
    if codes.validate(g, mode, result.code):
        return result
    result.valid = True
    result.repaired = True
    result.notes.append(f"construction invalid, repaired from size {result.size}")
    result.code = verify_or_repair(g, result.code, mode)
    return result


def _hypotheses(g: Graph) -> bool:
    return g.girth >= 5 and g.min_degree() >= 2


# --- n/2 locating-dominating set ----------------------------------------------


def ld_half(g: Graph) -> ConstructionResult:
    """Locating-dominating set of size at most n/2 on graphs of girth >= 5 and min degree >= 2.

    Normalises a greedy cover and takes the odd-position vertices of every path.
    """
    cover = normalize_ld(g, greedy_cover(g))
    code, f = set(), {}
    for p in cover.paths:
        code.update(p[i] for i in ld_pattern(len(p)))
        if len(p) >= 2:
            f[p[0]] = p[1]
        if len(p) == 5:
            f[p[4]] = p[3]
    result = ConstructionResult(
        frozenset(code), "ld-half", cover, Fraction(g.n, 2), _hypotheses(g), assignment=f
    )
    return _finish(g, result, "ld")


# --- two-in-five locating-dominating set ---------------------------------------------------------------------


def _d_positions(r: int) -> tuple[list[int], dict[int, int]]:
    k, i = divmod(r, 5)
    chosen = [j for j in range(5 * k) if j % 5 in (1, 3)]
    f = {}
    if i == 1:
        chosen.append(r - 1)
    elif i == 2:
        chosen.append(r - 2)
        f[r - 1] = r - 2
    elif i == 3:
        chosen += [r - 3, r - 2]
        f[r - 1] = r - 2
    elif i == 4:
        chosen += [r - 3, r - 1]
        f[r - 4] = r - 3
    for j in range(5 * k):
        if j % 5 == 0 and j not in chosen:
            f[j] = j + 1
        elif j % 5 == 4 and j not in chosen:
            f[j] = j - 1
    return chosen, f


def ld_from_cover(g: Graph, s: PathCover) -> ConstructionResult:
    """Two vertices in five along each cover path, plus a short tail chosen by the order mod 5.

    Always locating-dominating on graphs of girth >= 5, with size at most (2n + 4|S|) / 5.
    """
    require_girth5(g)
    require_valid_cover(g, s)
    cover = s.canonical()
    code, f = set(), {}
    for p in cover.paths:
        chosen, fp = _d_positions(len(p))
        code.update(p[j] for j in chosen)
        f.update((p[a], p[b]) for a, b in fp.items())
    bound = Fraction(2 * g.n + 4 * len(cover), 5)
    result = ConstructionResult(frozenset(code), "d-of-s", cover, bound, True, assignment=f)
    return _finish(g, result, "ld")


# --- 5n/7 identifying code ------------------------------------------------------


def _id_path_code(g: Graph, p: tuple[int, ...]) -> tuple[list[int], dict[int, int]]:
    r = len(p)
    if r in (8, 9) and is_isolated_cycle(g, p):
        # whole component is C8 or C9: alternate vertices on C8, two 3-blocks on C9
        chosen = [0, 2, 4, 6] if r == 8 else [0, 1, 2, 4, 5, 6]
        return [p[i] for i in chosen], {}
    f = {}
    if r == 4:
        f = {1: 0, 2: 3}
    elif 5 <= r <= 7:
        f = {0: 1, r - 1: r - 2}
    elif r == 8:
        f = {4: 3, 5: 6}
    elif r == 9:
        f = {5: 4, 6: 7}
    return [p[i] for i in id_pattern(r)], {p[a]: p[b] for a, b in f.items()}


def id_five_sevenths(g: Graph) -> ConstructionResult:
    """Identifying code of size at most 5n/7 on identifiable graphs of girth >= 5 and min degree >= 2."""
    if g.twins is not None:
        raise NotIdentifiableError(g.twins)
    cover = normalize_id(g, greedy_cover(g))
    code, f = set(), {}
    for p in cover.paths:
        chosen, fp = _id_path_code(g, p)
        code.update(chosen)
        f.update(fp)
    result = ConstructionResult(
        frozenset(code), "id-5-7", cover, Fraction(5 * g.n, 7), _hypotheses(g), assignment=f
    )
    return _finish(g, result, "id")


# --- three-in-five identifying code and its repairs ---------------------------------------------------------


def _c_positions(r: int) -> tuple[list[int], dict[int, int]]:
    k, i = divmod(r, 5)
    chosen = [j for j in range(5 * k) if j % 5 in (1, 2, 3)]
    f = {}
    if i == 1:
        if k:
            chosen.append(r - 2)
            f[r - 1] = r - 2
        else:
            chosen.append(0)
    elif i == 2:
        if k:
            chosen += [r - 3, r - 2]
            f[r - 1] = r - 2
        else:
            chosen += [0, 1]
    elif i == 3:
        chosen += [r - 3, r - 2, r - 1] if k else [0, 1, 2]
    elif i == 4:
        if k:
            chosen += [r - 4, r - 3, r - 2]
            f[r - 1] = r - 2
        else:
            chosen += [0, 1, 2]
            f[3] = 2
    for j in range(5 * k):
        if j % 5 == 0 and j not in chosen:
            f[j] = j + 1
        elif j % 5 == 4 and j not in chosen:
            f[j] = j - 1
    return chosen, f


def c_of_s(g: Graph, s: PathCover) -> tuple[set[int], dict[int, int]]:
    """Initial three-in-five vertex set and its assignment, paths oriented from the smaller endpoint.

    It may still contain code components of order two; :func:`id_from_cover` removes them.
    """
    code, f = set(), {}
    for p in s.canonical().paths:
        chosen, fp = _c_positions(len(p))
        code.update(p[j] for j in chosen)
        f.update((p[a], p[b]) for a, b in fp.items())
    return code, f


def _two_components(g: Graph, code: set[int]) -> list[list[int]]:
    return [c for c in induced_components(g, code) if len(c) == 2]


def _swap_out_pairs(g: Graph, cover: PathCover, code: set[int], f: dict[int, int], notes: list[str]) -> None:
    """Break every order-2 component {a, b} of the code: drop a, add an outside neighbour y of b."""
    as_path = {frozenset(p): p for p in cover.paths if len(p) == 2}
    for _ in range(g.n):
        pairs = _two_components(g, code)
        if not pairs:
            return
        pair = pairs[0]
        # for a 2-path x0-x1 the neighbour is taken at x1 when possible
        x0, x1 = as_path.get(frozenset(pair), tuple(pair))
        for a, b in ((x0, x1), (x1, x0)):
            outside = sorted(w for w in g.adj[b] if w != a)
            if outside:
                y = outside[0]
                code.discard(a)
                code.add(y)
                f[a] = b
                f.pop(y, None)
                notes.append(f"step2: pair {sorted(pair)} -> removed {a}, added {y}")
                break


def _save_s3_vertex(g: Graph, p: tuple[int, ...], code: set[int], f: dict[int, int], notes: list[str]) -> None:
    t0, t1, t2 = p[-3:]
    base = code - {t0, t1, t2}
    has = lambda v: bool(g.adj[v] & base)  # noqa: E731
    options = [
        ("a", (has(t1) or has(t2)), {t1, t2}, (t0, t1)),
        ("b", has(t0), {t0, t1}, (t2, t1)),
        ("c", not (has(t0) or has(t1) or has(t2)), {t0, t2}, None),
    ]
    # textual case order first, then the other cases as fallbacks
    ordered = [o for o in options if o[1]] + [o for o in options if not o[1]]
    for rank, (case, _, added, assign) in enumerate(ordered):
        trial = base | added
        if codes.is_id_girth5(g, trial):
            code.clear()
            code.update(trial)
            if assign is not None:
                f[assign[0]] = assign[1]
            notes.append(f"step3: path ending {p[-1]} saved with {sorted(added)} (case {case}{', fallback' if rank else ''})")
            return
    notes.append(f"step3: path ending {p[-1]} kept all three tail vertices")


def id_from_cover(g: Graph, s: PathCover) -> ConstructionResult:
    """Identifying code from the three-in-five set, with order-2 components broken up and one
    vertex saved on every path of order 3 mod 5.

    Size is at most (3n + 4|S|) / 5 on identifiable graphs of girth >= 5.
    """
    require_girth5(g)
    if g.twins is not None:
        raise NotIdentifiableError(g.twins)
    require_valid_cover(g, s)
    cover = s.canonical()
    code, f = c_of_s(g, cover)
    notes: list[str] = []
    _swap_out_pairs(g, cover, code, f, notes)
    for p in cover.paths:
        if len(p) % 5 == 3:
            _save_s3_vertex(g, p, code, f, notes)
    assignment = {x: t for x, t in f.items() if x not in code and t in code}
    bound = Fraction(3 * g.n + 4 * len(cover), 5)
    result = ConstructionResult(frozenset(code), "c-of-s", cover, bound, True, assignment=assignment, notes=notes)
    return _finish(g, result, "id")


METHODS = {
    "ld-half": lambda g, s=None: ld_half(g),
    "d-of-s": lambda g, s=None: ld_from_cover(g, s or greedy_cover(g)),
    "id-5-7": lambda g, s=None: id_five_sevenths(g),
    "c-of-s": lambda g, s=None: id_from_cover(g, s or greedy_cover(g)),
}
