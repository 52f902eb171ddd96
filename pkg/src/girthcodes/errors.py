"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """A graph6 line could not be decoded.

    ``offset`` is the byte offset (0-based, header excluded) where decoding
    went wrong.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class HypothesisError(ValueError):
    """An operation was called on a graph outside its hypotheses.

    ``hypothesis`` names the failed condition, e.g. ``"girth>=5"``.
    """

    def __init__(self, hypothesis: str, detail: str = "") -> None:
        msg = f"hypothesis failed: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.hypothesis = hypothesis


class NotIdentifiableError(HypothesisError):
    """The graph has twins, so no identifying code exists."""

    def __init__(self, twins: tuple[int, int]) -> None:
        super().__init__("identifiable", f"vertices {twins[0]} and {twins[1]} are twins")
        self.twins = twins


class InvalidCoverError(ValueError):
    """A path cover does not partition the vertex set into paths of the graph."""
