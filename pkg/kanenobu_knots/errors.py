# errors.py
from typing import List, Optional


class KanenobuError(Exception):
    """Base class for every error raised by kanenobu_knots."""


class DiagramError(KanenobuError, ValueError):
    """
    A planar diagram violates one or more of its invariants.

    `problems` holds (kind, message) pairs, one per violated invariant, so a
    caller can tell an arc-multiplicity error from an orientation error.
    """

    def __init__(self, kind: str, message: str, problems: Optional[List[tuple]] = None):
        self.kind = kind
        self.problems = problems or [(kind, message)]
        super().__init__(message if len(self.problems) == 1 else
                         "; ".join(f"{k}: {m}" for k, m in self.problems))


class PdParseError(KanenobuError, ValueError):
    """A `pdcode v1` file could not be parsed."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


class CapExceededError(KanenobuError, RuntimeError):
    """The diagram is larger than the configured crossing cap for an invariant."""

    def __init__(self, invariant: str, crossings: int, cap: int):
        self.invariant = invariant
        self.crossings = crossings
        self.cap = cap
        super().__init__(f"{invariant}: diagram has {crossings} crossings, cap is {cap}")
