import logging, time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from kanenobu_knots.algebra import LaurentPoly1, breadth
from kanenobu_knots.audit import ResultCache, cache_key
from kanenobu_knots.config import settings
from kanenobu_knots.diagram import PlanarDiagram, bridge_length, kanenobu_diagram
from kanenobu_knots.errors import CapExceededError
from kanenobu_knots.kanenobu import (
    crossing_number,
    jones_closed_form,
    khovanov_closed_form,
    q_closed_form,
)
from kanenobu_knots.khovanov import BigradedDims, euler_check, homology_dims, knight_move_check, lee_degrees, thinness_s
from kanenobu_knots.polyinv import BracketState, KauffmanEngine, jones, q_polynomial

logger = logging.getLogger(__name__)


class InvariantReport(BaseModel):
    """Everything computed for one diagram or one K(p, q)."""

    input: Dict[str, Any]
    engine_version: str = settings.ENGINE_VERSION
    crossings: int
    writhe: int
    components: int
    jones: Optional[List[List[int]]] = None
    q_poly: Optional[List[List[int]]] = None
    breadth: Optional[int] = None
    deg_q: Optional[int] = None
    bridge: Optional[int] = None
    khovanov: Optional[List[List[int]]] = None
    lee_degrees: Optional[List[int]] = None
    crossing_number: Optional[Dict[str, Optional[int]]] = None
    checks: Dict[str, bool] = Field(default_factory=dict)
    sources: Dict[str, str] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    wall_time: Optional[float] = None

    def jones_poly(self) -> Optional[LaurentPoly1]:
        return None if self.jones is None else LaurentPoly1.from_pairs(self.jones, "t")

    def q_polynomial(self) -> Optional[LaurentPoly1]:
        return None if self.q_poly is None else LaurentPoly1.from_pairs(self.q_poly, "x")

    def khovanov_dims(self) -> Optional[BigradedDims]:
        return None if self.khovanov is None else BigradedDims.from_rows(self.khovanov, self.components)


@dataclass(frozen=True)
class Caps:
    cube: int = settings.CLI_CUBE_CAP
    skein: int = settings.CLI_SKEIN_CAP
    lee: int = settings.LEE_MAX_CROSSINGS

    @classmethod
    def uniform(cls, n: int) -> "Caps":
        return cls(n, n, n)


def _cached(cache: ResultCache, name: str, d: PlanarDiagram, compute):
    return cache.get_or_compute(cache_key(name, d.canonical_key()), compute)


# name -> (cap field, diagram computation, closed form); values are JSON-ready
INVARIANTS = {
    "jones": ("cube", lambda d, cap: jones(d, BracketState(cap)).pairs(),
              lambda p, q: jones_closed_form(p, q).pairs()),
    "q_poly": ("skein", lambda d, cap: q_polynomial(d, KauffmanEngine(cap)).pairs(),
               lambda p, q: q_closed_form(p, q).pairs()),
    "khovanov": ("cube", lambda d, cap: homology_dims(d, cap).rows(),
                 lambda p, q: khovanov_closed_form(p, q).rows()),
}


def compute_invariant(name: str, d: PlanarDiagram, pq: Optional[Tuple[int, int]] = None,
                      caps: Caps = Caps(), cache: ResultCache = None) -> Tuple[Any, str]:
    """
    Compute one invariant from the diagram within its cap and return (value, source).

    Over the cap, a K(p, q) falls back to its closed form; any other diagram
    raises CapExceededError.
    """
    cap_field, from_diagram, from_closed_form = INVARIANTS[name]
    cap = getattr(caps, cap_field)
    if d.n <= cap:
        return _cached(cache or ResultCache(None), name, d, lambda: from_diagram(d, cap)), "diagram"
    if pq is None:
        raise CapExceededError(name, d.n, cap)
    logger.info("%s: %d crossings over cap %d, using closed form", name, d.n, cap)
    return from_closed_form(*pq), "closed-form"


def build_report(d: PlanarDiagram, descriptor: Dict[str, Any], pq: Optional[Tuple[int, int]] = None,
                 caps: Caps = Caps(), cache: ResultCache = None, timing: bool = False) -> InvariantReport:
    started = time.perf_counter()
    cache = cache or ResultCache(None)
    sources: Dict[str, str] = {}
    closed = pq is not None

    values = {}
    for name in INVARIANTS:
        values[name], sources[name] = compute_invariant(name, d, pq, caps, cache)
    jones_pairs, q_pairs, kh_rows = values["jones"], values["q_poly"], values["khovanov"]

    lee = None
    if d.n <= caps.lee:
        lee = _cached(cache, "lee", d, lambda: lee_degrees(d, caps.lee))
        sources["lee_degrees"] = "diagram"

    v = LaurentPoly1.from_pairs(jones_pairs, "t")
    qx = LaurentPoly1.from_pairs(q_pairs, "x")
    dims = BigradedDims.from_rows(kh_rows, d.component_count)
    bridge = bridge_length(d)
    report = InvariantReport(
        input=descriptor,
        crossings=d.n,
        writhe=d.writhe,
        components=d.component_count,
        jones=jones_pairs,
        q_poly=q_pairs,
        breadth=int(breadth(v)),
        deg_q=int(qx.max_exponent),
        bridge=bridge,
        khovanov=kh_rows,
        lee_degrees=lee,
        sources=sources,
    )

    checks = report.checks
    checks["euler"] = euler_check(dims, v)
    checks["kidwell"] = report.deg_q + bridge <= d.n
    if d.n and d.loops == 0 and len(d.graph().split_parts()) == 1:
        checks["breadth_bound"] = report.breadth <= d.n
    if lee is not None:
        checks["lee_total"] = len(lee) == 2 ** d.component_count
    if d.component_count == 1:
        s = thinness_s(dims)
        checks["thin"] = s is not None
        if s is not None:
            checks["knight_move"] = knight_move_check(dims, s)
    if closed:
        p, q = pq
        checks["jones_closed_form"] = v == jones_closed_form(p, q)
        checks["q_closed_form"] = qx == q_closed_form(p, q)
        checks["khovanov_closed_form"] = dims == khovanov_closed_form(p, q)
        result = crossing_number(p, q)
        report.crossing_number = result.to_json()
        report.notes.append(result.provenance)
    if timing:
        report.wall_time = round(time.perf_counter() - started, 6)
    logger.info("report for %s: %s", descriptor, checks)
    return report


def kanenobu_report(p: int, q: int, **kwargs) -> InvariantReport:
    d = kanenobu_diagram(p, q)
    return build_report(d, {"kind": "kanenobu", "p": p, "q": q}, pq=(p, q), **kwargs)
