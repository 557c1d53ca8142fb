# family.py
"""
Kanenobu knot diagrams K(p, q).

The template is the figure-eight diagram D on the left of a vertical axis
and a copy D' on the right, turned through a half turn with every crossing
switched. The outer triangle of D (arcs 4, 7, 2 from top to bottom) faces
the axis, so D' shows its arcs 2', 7', 4' in the same rows. Each row pair
is one site:

    rows 1-2   arc 4 against arc 2'   q twist column
    rows 3-4   arc 7 against arc 7'   p twist column
    rows 5-6   arc 2 against arc 4'   connected-sum band (K(0,0) = 4_1 # 4_1)

A twist column replaces the two parallel strands of its site by |p| (resp.
|q|) crossings; the strands run against each other, so every crossing of a
column has the sign of its parameter.
"""
import logging
from functools import lru_cache
from typing import Dict, Tuple

from .graph import Slot, SlotGraph
from .operations import arc_ends
from .planar import PlanarDiagram

logger = logging.getLogger(__name__)

FIGURE_EIGHT = ((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8))
P_ARCS = (7, 7)
Q_ARCS = (4, 2)
SUM_ARCS = (2, 4)

# corner slots of a twist crossing for the two possible handednesses
_CORNERS = (
    {"NW": 0, "SW": 1, "SE": 2, "NE": 3},
    {"NE": 0, "NW": 1, "SW": 2, "SE": 3},
)


def twist_crossing_indices(p: int, q: int) -> Tuple[range, range]:
    """Crossing indices of the p and q twist columns in kanenobu_diagram(p, q)."""
    return range(0, abs(p)), range(abs(p), abs(p) + abs(q))


def _build(p: int, q: int, hands: Tuple[int, int]) -> PlanarDiagram:
    base = PlanarDiagram.from_pd(FIGURE_EIGHT)
    offset = abs(p) + abs(q)
    partner: Dict[Slot, Slot] = {}

    def link(a: Slot, b: Slot) -> None:
        partner[a] = b
        partner[b] = a

    def own(slot: Slot) -> Slot:
        return offset + slot[0], slot[1]

    def turned(slot: Slot) -> Slot:
        return offset + base.n + slot[0], slot[1]

    sites = (P_ARCS, Q_ARCS, SUM_ARCS)
    for label in range(1, 2 * base.n + 1):
        tail, head = arc_ends(base, label)
        if label not in {left for left, _ in sites}:
            link(own(tail), own(head))
        if label not in {right for _, right in sites}:
            link(turned(tail), turned(head))

    # the half turn puts each right-hand arc upside down: heads meet tails
    left, right = arc_ends(base, SUM_ARCS[0]), arc_ends(base, SUM_ARCS[1])
    link(own(left[1]), turned(right[0]))
    link(own(left[0]), turned(right[1]))

    p_left, p_right = arc_ends(base, P_ARCS[0]), arc_ends(base, P_ARCS[1])
    q_left, q_right = arc_ends(base, Q_ARCS[0]), arc_ends(base, Q_ARCS[1])
    columns = (
        (own(p_left[0]), turned(p_right[1]), own(p_left[1]), turned(p_right[0]), abs(p), hands[0]),
        (own(q_left[1]), turned(q_right[0]), own(q_left[0]), turned(q_right[1]), abs(q), hands[1]),
    )

    first = 0
    for left_top, right_top, left_bottom, right_bottom, twists, hand in columns:
        if twists == 0:
            link(left_top, left_bottom)
            link(right_top, right_bottom)
            continue
        corner = _CORNERS[hand]
        column = range(first, first + twists)
        link(left_top, (column[0], corner["NW"]))
        link(right_top, (column[0], corner["NE"]))
        for upper, lower in zip(column, column[1:]):
            link((upper, corner["SW"]), (lower, corner["NW"]))
            link((upper, corner["SE"]), (lower, corner["NE"]))
        link((column[-1], corner["SW"]), left_bottom)
        link((column[-1], corner["SE"]), right_bottom)
        first += twists

    # D' crossings are switched: their under-strand sits on slots 1/3
    under_even = [True] * (offset + base.n) + [False] * base.n
    return SlotGraph(partner, under_even).to_diagram()


def _mismatched_sites(d: PlanarDiagram, p: int, q: int):
    out = []
    for site, (n, indices) in enumerate(zip((p, q), twist_crossing_indices(p, q))):
        want = 1 if n > 0 else -1
        if any(d.signs[c] != want for c in indices):
            out.append(site)
    return out


@lru_cache(maxsize=None)
def kanenobu_diagram(p: int, q: int) -> PlanarDiagram:
    """Diagram of K(p, q) with |p| + |q| + 8 crossings, twist crossings first."""
    hands = [0, 0]
    d = _build(p, q, tuple(hands))
    bad = _mismatched_sites(d, p, q)
    if bad:
        for site in bad:
            hands[site] = 1
        d = _build(p, q, tuple(hands))
        if _mismatched_sites(d, p, q):
            raise RuntimeError(f"twist crossings of K({p}, {q}) have inconsistent signs")
    logger.debug("K(%d, %d): %d crossings, writhe %d, twist hands %s", p, q, d.n, d.writhe, hands)
    return d
