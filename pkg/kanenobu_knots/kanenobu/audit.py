# audit.py
import logging
from dataclasses import asdict, dataclass
from typing import Optional

from ..algebra import breadth
from ..diagram import bridge_length, kanenobu_diagram
from ..polyinv import BracketState, KauffmanEngine, jones, q_polynomial
from ..config import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KidwellReport:
    p: int
    q: int
    deg_q: int
    bridge: int
    crossings: int
    inequality_holds: bool
    jones_breadth: Optional[int] = None
    breadth_below_crossings: Optional[bool] = None

    def to_dict(self) -> dict:
        return asdict(self)


def kidwell_audit(p: int, q: int, engine: Optional[KauffmanEngine] = None,
                  with_jones: bool = True) -> KidwellReport:
    """deg Q + b(D) <= c(D) on the generated diagram of K(p, q)."""
    d = kanenobu_diagram(p, q)
    deg_q = int(q_polynomial(d, engine).max_exponent)
    bridge = bridge_length(d)
    span = None
    below = None
    if with_jones:
        span = int(breadth(jones(d, BracketState(settings.JONES_MAX_CROSSINGS))))
        below = span < d.n
    report = KidwellReport(p, q, deg_q, bridge, d.n, deg_q + bridge <= d.n, span, below)
    logger.info("kidwell audit K(%d, %d): deg Q %d + b %d vs c %d -> %s",
                p, q, deg_q, bridge, d.n, report.inequality_holds)
    return report
