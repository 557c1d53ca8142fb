# operations.py
from __future__ import annotations

import logging
from typing import List, Tuple

from ..errors import DiagramError
from .graph import Slot, SlotGraph
from .planar import PlanarDiagram

logger = logging.getLogger(__name__)


def _switched(crossing, sign) -> Tuple[Tuple[int, int, int, int], int]:
    a, b, c, d = crossing
    # the old over-strand becomes the under-strand and starts the tuple
    if sign > 0:
        return (d, a, b, c), -1
    return (b, c, d, a), 1


def switch(d: PlanarDiagram, c: int) -> PlanarDiagram:
    if not 0 <= c < d.n:
        raise DiagramError("index", f"crossing {c} out of range 0..{d.n - 1}")
    crossings = list(d.crossings)
    signs = list(d.signs)
    crossings[c], signs[c] = _switched(crossings[c], signs[c])
    return PlanarDiagram(tuple(crossings), tuple(signs), d.loops)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    pairs = [_switched(c, s) for c, s in zip(d.crossings, d.signs)]
    return PlanarDiagram(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), d.loops)


def _union_graph(g1: SlotGraph, g2: SlotGraph) -> SlotGraph:
    shift = g1.n
    partner = dict(g1.partner)
    partner.update({(v + shift, k): (w + shift, m) for (v, k), (w, m) in g2.partner.items()})
    return SlotGraph(partner, g1.under_even + g2.under_even, g1.loops + g2.loops,
                     g1.incoming + g2.incoming)


def disjoint_union(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    offset = 2 * d1.n
    shifted = tuple(tuple(a + offset for a in c) for c in d2.crossings)
    return PlanarDiagram(d1.crossings + shifted, d1.signs + d2.signs, d1.loops + d2.loops)


def arc_ends(d: PlanarDiagram, arc: int) -> Tuple[Slot, Slot]:
    """(tail slot, head slot) of an arc in the diagram's slot graph."""
    tail = head = None
    for c, crossing in enumerate(d.crossings):
        for pos, label in enumerate(crossing):
            if label != arc:
                continue
            if pos in (0, d.over_in_position(c)):
                head = (c, pos)
            else:
                tail = (c, pos)
    if tail is None or head is None:
        raise DiagramError("arc-choice", f"arc {arc} is not an arc of the diagram")
    return tail, head


def connected_sum(d1: PlanarDiagram, d2: PlanarDiagram, arc1: int = 1, arc2: int = 1) -> PlanarDiagram:
    if d1.n == 0 or d2.n == 0:
        if (d1.n == 0 and d1.loops == 0) or (d2.n == 0 and d2.loops == 0):
            raise DiagramError("arc-choice", "cannot form a connected sum with an empty diagram")
        big = d2 if d1.n == 0 else d1
        return PlanarDiagram(big.crossings, big.signs, d1.loops + d2.loops - 1)
    tail1, head1 = arc_ends(d1, arc1)
    tail2, head2 = arc_ends(d2, arc2)
    shift = d1.n
    tail2, head2 = (tail2[0] + shift, tail2[1]), (head2[0] + shift, head2[1])
    g = _union_graph(d1.graph(), d2.graph())
    g.partner[tail1], g.partner[head2] = head2, tail1
    g.partner[tail2], g.partner[head1] = head1, tail2
    return g.to_diagram()


def resolve(d: PlanarDiagram, c: int, r: int) -> PlanarDiagram:
    """
    Smooth crossing c (0: join (a,b),(c,d); 1: join (a,d),(b,c)) and relabel.

    The oriented smoothing keeps the diagram's orientation; the other one
    re-orients each resulting component along its first traversal.
    """
    if not 0 <= c < d.n:
        raise DiagramError("index", f"crossing {c} out of range 0..{d.n - 1}")
    if r not in (0, 1):
        raise DiagramError("index", f"resolution must be 0 or 1, got {r}")
    oriented = (d.signs[c] > 0) == (r == 0)
    return d.graph().smooth(c, r, keep_orientation=oriented).to_diagram()


def over_under_sequences(d: PlanarDiagram) -> List[List[bool]]:
    """Per component, True for each over-pass in traversal order."""
    head_pos = {}
    for c, crossing in enumerate(d.crossings):
        for pos in (0, d.over_in_position(c)):
            head_pos[crossing[pos]] = pos
    return [[head_pos[label] != 0 for label in seq] for seq in d.label_sequences()]


def bridge_length(d: PlanarDiagram) -> int:
    """Longest cyclic run of consecutive over-passes or under-passes; 0 without crossings."""
    best = 0
    for seq in over_under_sequences(d):
        if all(s == seq[0] for s in seq):
            best = max(best, len(seq))
            continue
        start = next(i for i in range(len(seq)) if seq[i] != seq[i - 1])
        rotated = seq[start:] + seq[:start]
        run = 1
        for prev, cur in zip(rotated, rotated[1:]):
            run = run + 1 if cur == prev else 1
            best = max(best, run)
        best = max(best, 1)
    return best


def is_alternating(d: PlanarDiagram) -> bool:
    return d.n == 0 or bridge_length(d) == 1


def reidemeister_one(d: PlanarDiagram, arc: int, sign: int = 1) -> PlanarDiagram:
    """Add a curl of the given writhe sign on an arc."""
    tail, head = arc_ends(d, arc) if d.n else (None, None)
    if d.n == 0:
        # a curl on a free loop: a single crossing diagram
        crossing = (1, 1, 2, 2) if sign > 0 else (1, 2, 2, 1)
        return PlanarDiagram((crossing,), (1 if sign > 0 else -1,), d.loops - 1)
    g = d.graph()
    v = g.n
    loop_in = 3 if sign > 0 else 1
    g.partner[tail], g.partner[(v, 0)] = (v, 0), tail
    g.partner[(v, 2)], g.partner[(v, loop_in)] = (v, loop_in), (v, 2)
    exit_slot = (v, (loop_in + 2) % 4)
    g.partner[exit_slot], g.partner[head] = head, exit_slot
    g.under_even.append(True)
    g.incoming.append(frozenset((0, loop_in)))
    return g.to_diagram()


def reidemeister_two(d: PlanarDiagram, arc1: int, arc2: int) -> PlanarDiagram:
    """Push arc1 over arc2 across a face they share, creating two crossings."""
    if arc1 == arc2:
        raise DiagramError("arc-choice", "a second Reidemeister move needs two different arcs")
    ends1 = set(arc_ends(d, arc1))
    ends2 = set(arc_ends(d, arc2))
    g = d.graph()
    for face in g.faces():
        e1 = next((e for e in face if set(e) == ends1), None)
        e2 = next((e for e in face if set(e) == ends2), None)
        if e1 is not None and e2 is not None:
            break
    else:
        raise DiagramError("arc-choice", f"arcs {arc1} and {arc2} do not share a face")
    (p1, q1), (p2, q2) = e1, e2
    x, y = g.n, g.n + 1
    forward1 = not g.is_incoming(p1)
    forward2 = not g.is_incoming(p2)
    links = [(p1, (x, 0)), ((x, 2), (y, 0)), ((y, 2), q1),
             (p2, (y, 1)), ((y, 3), (x, 3)), ((x, 1), q2)]
    for s, t in links:
        g.partner[s], g.partner[t] = t, s
    g.under_even.extend([False, False])
    g.incoming.append(frozenset((0 if forward1 else 2, 3 if forward2 else 1)))
    g.incoming.append(frozenset((0 if forward1 else 2, 1 if forward2 else 3)))
    return g.to_diagram()
