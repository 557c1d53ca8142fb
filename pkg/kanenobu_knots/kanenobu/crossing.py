# crossing.py
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple, Union

CONJECTURE_BOUND = "c(K(p,q)) <= |p|+|q|+8"
CONJECTURE_VALUE = "the crossing number is |p|+|q|+8"


@dataclass(frozen=True)
class Exact:
    n: int
    provenance: str

    def to_json(self) -> dict:
        return {"exact": self.n}

    def __str__(self) -> str:
        return f"Exact({self.n})"


@dataclass(frozen=True)
class Bounds:
    lo: int
    hi: int
    conjectured: Optional[int]
    provenance: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty crossing-number interval [{self.lo}, {self.hi}]")
        if self.conjectured is not None and not self.lo <= self.conjectured <= self.hi:
            raise ValueError(f"conjectured value {self.conjectured} outside [{self.lo}, {self.hi}]")

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "conjectured": self.conjectured}

    def __str__(self) -> str:
        return f"Bounds({self.lo}, {self.hi}, conjectured={self.conjectured})"


CrossingNumberResult = Union[Exact, Bounds]


def crossing_number(p: int, q: int) -> CrossingNumberResult:
    total = abs(p) + abs(q)
    product = p * q
    if product < 0 and total == 2:
        return Exact(total + 6, "pq < 0 and |p|+|q| = 2: reduced alternating 8-crossing diagram")
    if product < 0 and (abs(p) == 1) != (abs(q) == 1):
        return Exact(total + 7, "pq < 0 with exactly one of |p|, |q| equal to 1")
    if product == 0 and total == 1:
        return Exact(total + 7, "pq = 0 and |p|+|q| = 1")
    if product >= 0:
        return Exact(total + 8, "pq > 0, or pq = 0 and |p|+|q| != 1: deg Q + b(D) meets the diagram")
    return Bounds(total + 7, total + 8, total + 8,
                  f"pq < 0 with |p|, |q| >= 2; conjectured: {CONJECTURE_BOUND} "
                  f"({CONJECTURE_VALUE})")


ALTERNATING_EXCEPTIONS: FrozenSet[Tuple[int, int]] = frozenset({
    (0, 0), (1, 0), (0, 1), (-1, 0), (0, -1), (1, -1), (-1, 1),
})


def alternating_exceptions() -> FrozenSet[Tuple[int, int]]:
    """The only K(p, q) that are alternating knots."""
    return ALTERNATING_EXCEPTIONS
