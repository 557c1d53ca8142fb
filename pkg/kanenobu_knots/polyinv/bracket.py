# bracket.py
"""
Jones polynomial through the Kauffman bracket state sum.

<D> = sum over all 2^n smoothings of A^(#0 - #1) * delta^(circles - 1), with
delta = -A^2 - A^-2; V(D) = (-A^3)^(-w) <D> evaluated at A = t^(-1/4).
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional

from networkx.utils import UnionFind

from ..algebra import LaurentPoly1
from ..config import settings
from ..diagram import PlanarDiagram, resolve, switch
from ..diagram.states import smoothing_pairs
from ..errors import CapExceededError

logger = logging.getLogger(__name__)

DELTA = LaurentPoly1({4: -1, -4: -1}, "A")


@dataclass
class BracketState:
    """Memo of computed values keyed by canonical diagram encoding, plus a crossing cap."""

    cap: int
    memo: Dict[tuple, object] = field(default_factory=dict)
    depth: int = 0
    max_depth: int = 0
    hits: int = 0

    def check_cap(self, invariant: str, d: PlanarDiagram) -> None:
        if d.n > self.cap:
            raise CapExceededError(invariant, d.n, self.cap)

    def lookup(self, key):
        value = self.memo.get(key)
        if value is not None:
            self.hits += 1
        return value

    def store(self, key, value) -> None:
        self.memo[key] = value

    def enter(self) -> None:
        self.depth += 1
        self.max_depth = max(self.max_depth, self.depth)

    def leave(self) -> None:
        self.depth -= 1


def state_counts(d: PlanarDiagram) -> Counter:
    """(number of 1-smoothings, circle count) -> number of states."""
    labels = range(1, 2 * d.n + 1)
    counts: Counter = Counter()
    for choice in itertools.product((0, 1), repeat=d.n):
        uf = UnionFind(labels)
        for crossing, r in zip(d.crossings, choice):
            for x, y in smoothing_pairs(crossing, r):
                uf.union(x, y)
        circles = len({uf[a] for a in labels}) + d.loops
        counts[(sum(choice), circles)] += 1
    return counts


def bracket(d: PlanarDiagram) -> LaurentPoly1:
    """Kauffman bracket <D> in the variable A, normalised so that <O> = 1."""
    total = LaurentPoly1({}, "A")
    delta_powers = {}
    for (ones, circles), mult in sorted(state_counts(d).items()):
        if circles not in delta_powers:
            delta_powers[circles] = DELTA ** (circles - 1)
        total = total + delta_powers[circles].shift(2 * (d.n - 2 * ones)) * mult
    return total


def jones(d: PlanarDiagram, state: Optional[BracketState] = None, cap: Optional[int] = None) -> LaurentPoly1:
    """Jones polynomial in t (half-integer exponents for even-component links)."""
    state = state or BracketState(cap if cap is not None else settings.JONES_MAX_CROSSINGS)
    state.check_cap("jones", d)
    key = ("jones", d.canonical_key())
    cached = state.lookup(key)
    if cached is not None:
        return cached
    w = d.writhe
    normalised = bracket(d) * LaurentPoly1.monomial(-6 * w, -1 if w % 2 else 1, "A")
    v = normalised.rescale(-1, 4, "t")
    logger.debug("jones: %d crossings, writhe %d -> %s", d.n, w, v)
    state.store(key, v)
    return v


def skein_triple(d: PlanarDiagram, c: int):
    """(L+, L-, L0) obtained from d by switching and smoothing crossing c."""
    other = switch(d, c)
    oriented = resolve(d, c, 0 if d.signs[c] > 0 else 1)
    if d.signs[c] > 0:
        return d, other, oriented
    return other, d, oriented


def skein_check(d: PlanarDiagram, c: int, state: Optional[BracketState] = None) -> bool:
    """t^-1 V(L+) - t V(L-) == (t^1/2 - t^-1/2) V(L0) at crossing c."""
    plus, minus, zero = skein_triple(d, c)
    state = state or BracketState(settings.JONES_MAX_CROSSINGS)
    lhs = LaurentPoly1.monomial(-2) * jones(plus, state) - LaurentPoly1.monomial(2) * jones(minus, state)
    rhs = (LaurentPoly1.monomial(1) - LaurentPoly1.monomial(-1)) * jones(zero, state)
    return lhs == rhs
