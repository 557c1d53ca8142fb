# kauffman.py
"""
Two-variable Kauffman polynomial by skein recursion toward descending diagrams.

Lambda is a regular-isotopy invariant of unoriented diagrams with
    Lambda(O) = 1,  Lambda(positive curl) = a * Lambda,
    Lambda(D) + Lambda(D switched at c) = x * (Lambda(D_0) + Lambda(D_1)).

Evaluation of a diagram:
  1. strip free loops (factor delta each), curls (factor a^+-1) and
     removable bigons until none is left;
  2. look the result up in the memo by its unoriented canonical key;
  3. walk the components from fixed base points; at the first crossing
     met first as an under-pass, apply the skein relation. The switched
     diagram keeps the walk, so the next bad crossing lies strictly later;
     the two smoothings have one crossing fewer.
A descending diagram is an unlink: Lambda = a^w delta^(k-1).
"""
import logging
from typing import Optional

from ..algebra import LaurentPoly1, LaurentPoly2
from ..config import settings
from ..diagram import PlanarDiagram
from ..diagram.graph import SlotGraph
from .bracket import BracketState

logger = logging.getLogger(__name__)

X = LaurentPoly2.monomial(0, 1)
DELTA = LaurentPoly2.monomial(1, -1) + LaurentPoly2.monomial(-1, -1) - 1


def _a_power(k: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(k, 0)


class KauffmanEngine:
    """Memoised Lambda evaluator; one instance may be reused across diagrams."""

    def __init__(self, cap: Optional[int] = None):
        self.state = BracketState(cap if cap is not None else settings.KAUFFMAN_MAX_CROSSINGS)

    def lam(self, d: PlanarDiagram) -> LaurentPoly2:
        self.state.check_cap("kauffman", d)
        g = SlotGraph.from_diagram(d)
        g.incoming = None
        value = self._lambda(g)
        logger.debug("kauffman: %d crossings, memo %d entries, %d hits, depth %d",
                     d.n, len(self.state.memo), self.state.hits, self.state.max_depth)
        return value

    def _simplify(self, g: SlotGraph):
        factor = LaurentPoly2.constant(1)
        while g.n:
            curl = g.find_curl()
            if curl is not None:
                v, sign = curl
                factor = factor * _a_power(sign)
                g = g.remove_straight({v})
                continue
            bigon = g.find_bigon()
            if bigon is not None:
                g = g.remove_straight(set(bigon))
                continue
            break
        return g, factor

    def _lambda(self, g: SlotGraph) -> LaurentPoly2:
        g, factor = self._simplify(g)
        if g.n == 0:
            return factor * DELTA ** (g.loops - 1) if g.loops else factor
        if g.loops:
            factor = factor * DELTA ** g.loops
            g = SlotGraph(g.partner, g.under_even, 0, g.incoming)
        key = g.canonical_key()
        cached = self.state.lookup(key)
        if cached is None:
            self.state.enter()
            cached = self._descend(g)
            self.state.leave()
            self.state.store(key, cached)
        return factor * cached

    def _descend(self, g: SlotGraph) -> LaurentPoly2:
        total = LaurentPoly2()
        sign = 1
        while True:
            components = g.traverse()
            bad = _first_under_first(g, components)
            if bad is None:
                writhe = sum(g.signs(components))
                return total + _a_power(writhe) * DELTA ** (len(components) + g.loops - 1) * sign
            smoothed = self._lambda(g.smooth(bad, 0)) + self._lambda(g.smooth(bad, 1))
            total = total + X * smoothed * sign
            sign = -sign
            g = g.switch(bad)


def _first_under_first(g: SlotGraph, components) -> Optional[int]:
    """First crossing whose first visit along the walk is an under-pass."""
    seen = set()
    for visits in components:
        for slot in visits:
            if slot[0] in seen:
                continue
            seen.add(slot[0])
            if g.is_under(slot):
                return slot[0]
    return None


def kauffman_lambda(d: PlanarDiagram, engine: Optional[KauffmanEngine] = None) -> LaurentPoly2:
    return (engine or KauffmanEngine()).lam(d)


def kauffman_F(d: PlanarDiagram, engine: Optional[KauffmanEngine] = None) -> LaurentPoly2:
    """F = a^(-w) Lambda, an ambient-isotopy invariant."""
    return kauffman_lambda(d, engine) * _a_power(-d.writhe)


def q_polynomial(d: PlanarDiagram, engine: Optional[KauffmanEngine] = None) -> LaurentPoly1:
    """Q(x) = F(1, x)."""
    return kauffman_F(d, engine).specialize_a(1)
