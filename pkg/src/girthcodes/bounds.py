"""Upper and lower bound formulas for location-domination and identifying code numbers.

All values are exact fractions; they are only compared against integer set
sizes, never rounded in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HypothesisError
from .graph import Graph
from .pathcover import greedy_cover

GIRTH5 = "girth>=5"
MINDEG2 = "min-degree>=2"
CUBIC = "cubic+connected"
IDENTIFIABLE = "identifiable"
COVER = "path-cover"


@dataclass(frozen=True)
class Candidate:
    name: str
    value: Fraction
    hypotheses: dict[str, bool]

    @property
    def applicable(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def failed(self) -> list[str]:
        return [h for h, ok in self.hypotheses.items() if not ok]

    def admits(self, size: int) -> bool:
        return size <= self.value

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": str(self.value),
            "floor": self.value.numerator // self.value.denominator,
            "applicable": self.applicable,
            "failed": self.failed,
        }


@dataclass(frozen=True)
class BoundReport:
    n: int
    delta: int
    Delta: int
    girth: float
    alpha_achieved: Fraction | None
    ld_upper_candidates: list[Candidate] = field(default_factory=list)
    id_upper_candidates: list[Candidate] = field(default_factory=list)
    ld_lower: Fraction | None = None
    id_lower: Fraction | None = None

    def applicable(self, mode: str) -> list[Candidate]:
        cands = self.ld_upper_candidates if mode == "ld" else self.id_upper_candidates
        return [c for c in cands if c.applicable]

    def lower(self, mode: str) -> Fraction | None:
        return self.ld_lower if mode == "ld" else self.id_lower

    def sandwich_violations(self, mode: str, optimum: int) -> list[str]:
        """Names of bounds that ``optimum`` contradicts (empty when consistent)."""
        bad = [c.name for c in self.applicable(mode) if not c.admits(optimum)]
        low = self.lower(mode)
        if low is not None and optimum < low:
            bad.append("lower")
        return bad

    def to_json(self) -> dict:
        def opt(x):
            return None if x is None else str(x)

        return {
            "n": self.n,
            "delta": self.delta,
            "Delta": self.Delta,
            "girth": None if self.girth == float("inf") else self.girth,
            "alpha": opt(self.alpha_achieved),
            "ld_upper": [c.to_json() for c in self.ld_upper_candidates],
            "id_upper": [c.to_json() for c in self.id_upper_candidates],
            "ld_lower": opt(self.ld_lower),
            "id_lower": opt(self.id_lower),
        }


def evaluate(
    n: int,
    delta: int,
    Delta: int,
    girth: float,
    connected: bool = True,
    identifiable: bool = True,
    alpha: Fraction | None = None,
) -> BoundReport:
    """Evaluate every bound from graph parameters alone (the graph need not exist)."""
    g5 = girth >= 5
    cubic = delta == Delta == 3 and connected
    has_cover = alpha is not None
    a = Fraction(alpha) if has_cover else Fraction(1)
    ld = [
        Candidate("n/2", Fraction(n, 2), {GIRTH5: g5, MINDEG2: delta >= 2}),
        Candidate("(2+4a)n/5", (2 + 4 * a) * n / 5, {GIRTH5: g5, COVER: has_cover}),
        Candidate("22n/45", Fraction(22 * n, 45), {GIRTH5: g5, CUBIC: cubic}),
    ]
    idc = [
        Candidate("5n/7", Fraction(5 * n, 7), {GIRTH5: g5, MINDEG2: delta >= 2, IDENTIFIABLE: identifiable}),
        Candidate("(3+4a)n/5", (3 + 4 * a) * n / 5, {GIRTH5: g5, COVER: has_cover, IDENTIFIABLE: identifiable}),
        Candidate("31n/45", Fraction(31 * n, 45), {GIRTH5: g5, CUBIC: cubic, IDENTIFIABLE: identifiable}),
    ]
    ld_low = id_low = None
    if Delta >= 1:
        ld_low = Fraction(2 * n, Delta + 3)
        id_low = Fraction(2 * n, Delta + 2) if identifiable else None
    return BoundReport(n, delta, Delta, girth, alpha if has_cover else None, ld, idc, ld_low, id_low)


def upper_bounds(g: Graph, alpha: Fraction | None = None) -> BoundReport:
    """Bound report for ``g``; ``alpha`` defaults to that of a greedy path cover."""
    if alpha is None and g.n:
        alpha = greedy_cover(g).alpha
    return evaluate(
        g.n,
        g.min_degree(),
        g.max_degree(),
        g.girth,
        connected=g.is_connected(),
        identifiable=g.twins is None,
        alpha=alpha,
    )


def lower_bounds(n: int, Delta: int) -> tuple[int, int]:
    """Integer lower bounds on the location-domination and identifying code numbers."""
    if Delta < 1:
        raise HypothesisError("Delta>=1", f"got Delta={Delta}")
    return -(-2 * n // (Delta + 3)), -(-2 * n // (Delta + 2))
