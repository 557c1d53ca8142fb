# graph.py
"""
Planar 4-valent graph behind every diagram operation.

A vertex is a crossing with four slots numbered counterclockwise. Slots
0/2 carry the under-strand when `under_even[v]` is true, otherwise slots
1/3 do. `partner` pairs every slot with the slot at the other end of its
edge. Orientation is optional: `incoming[v]` holds the two slots through
which the strands enter v.
"""
from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Slot = Tuple[int, int]


def _straight(vertices) -> Dict[Slot, Slot]:
    return {(v, k): (v, (k + 2) % 4) for v in vertices for k in range(4)}


class SlotGraph:

    def __init__(self, partner: Dict[Slot, Slot], under_even: Sequence[bool],
                 loops: int = 0, incoming: Optional[Sequence[FrozenSet[int]]] = None):
        self.partner = dict(partner)
        self.under_even = list(under_even)
        self.loops = loops
        self.incoming = None if incoming is None else [frozenset(s) for s in incoming]

    @property
    def n(self) -> int:
        return len(self.under_even)

    def copy(self) -> "SlotGraph":
        return SlotGraph(self.partner, self.under_even, self.loops, self.incoming)

    def is_under(self, slot: Slot) -> bool:
        v, k = slot
        return (k % 2 == 0) == self.under_even[v]

    def is_incoming(self, slot: Slot) -> bool:
        return self.incoming is not None and slot[1] in self.incoming[slot[0]]

    # --- construction from / to PD ----------------------------------------
    @classmethod
    def from_diagram(cls, diagram) -> "SlotGraph":
        where: Dict[int, List[Slot]] = {}
        for v, crossing in enumerate(diagram.crossings):
            for k, label in enumerate(crossing):
                where.setdefault(label, []).append((v, k))
        partner: Dict[Slot, Slot] = {}
        for label, (s1, s2) in where.items():
            partner[s1] = s2
            partner[s2] = s1
        incoming = [frozenset((0, 3 if s > 0 else 1)) for s in diagram.signs]
        return cls(partner, [True] * diagram.n, diagram.loops, incoming)

    def traverse(self) -> List[List[Slot]]:
        """
        Walk every component; returns, per component, the slots entered in order.

        Components start at the lowest unused slot (an outgoing one when the
        graph is oriented), so the walk depends only on the graph.
        """
        used: Set[Slot] = set()
        components = []
        for v in range(self.n):
            for k in range(4):
                start = (v, k)
                if start in used or self.is_incoming(start):
                    continue
                visits = []
                out = start
                while True:
                    used.add(out)
                    entered = self.partner[out]
                    used.add(entered)
                    visits.append(entered)
                    out = (entered[0], (entered[1] + 2) % 4)
                    if out == start:
                        break
                components.append(visits)
        return components

    def orientation(self, components: List[List[Slot]] = None) -> List[Tuple[int, int]]:
        """(under in-slot, over in-slot) per vertex, read off a traversal."""
        components = components if components is not None else self.traverse()
        under_in: Dict[int, int] = {}
        over_in: Dict[int, int] = {}
        for visits in components:
            for slot in visits:
                (under_in if self.is_under(slot) else over_in)[slot[0]] = slot[1]
        return [(under_in[v], over_in[v]) for v in range(self.n)]

    def signs(self, components: List[List[Slot]] = None) -> List[int]:
        return [1 if o == (u + 3) % 4 else -1 for u, o in self.orientation(components)]

    def to_diagram(self):
        from .planar import PlanarDiagram

        components = self.traverse()
        label: Dict[Slot, int] = {}
        next_label = 1
        for visits in components:
            for entered in visits:
                label[entered] = label[self.partner[entered]] = next_label
                next_label += 1
        crossings = []
        signs = []
        for v, (u, o) in enumerate(self.orientation(components)):
            crossings.append(tuple(label[(v, (u + i) % 4)] for i in range(4)))
            signs.append(1 if o == (u + 3) % 4 else -1)
        return PlanarDiagram(tuple(crossings), tuple(signs), self.loops)

    # --- local surgery -----------------------------------------------------
    def splice(self, removed: Set[int], through: Dict[Slot, Slot],
               keep_orientation: bool = False) -> "SlotGraph":
        """
        Delete the `removed` vertices, reconnecting strands along `through`.

        `through` pairs the slots of each removed vertex the way the strands
        now run across it. Closed curves left entirely inside the removed
        part become free loops.
        """
        partner = self.partner
        joined: Dict[Slot, Slot] = {}
        inner_used: Set[Slot] = set()
        for slot, other in partner.items():
            if slot[0] in removed or slot in joined:
                continue
            if other[0] not in removed:
                joined[slot] = other
                continue
            cur = other
            while True:
                out = through[cur]
                inner_used.add(cur)
                inner_used.add(out)
                nxt = partner[out]
                if nxt[0] not in removed:
                    break
                cur = nxt
            joined[slot] = nxt
            joined[nxt] = slot

        loops = self.loops
        remaining = {(v, k) for v in removed for k in range(4)} - inner_used
        while remaining:
            start = min(remaining)
            cur = start
            while True:
                out = through[cur]
                remaining.discard(cur)
                remaining.discard(out)
                nxt = partner[out]
                if nxt == start:
                    break
                cur = nxt
            loops += 1

        keep = [v for v in range(self.n) if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        new_partner = {(index[v], k): (index[w], m) for (v, k), (w, m) in joined.items()}
        incoming = None
        if keep_orientation and self.incoming is not None:
            incoming = [self.incoming[v] for v in keep]
        return SlotGraph(new_partner, [self.under_even[v] for v in keep], loops, incoming)

    def smoothing_map(self, v: int, r: int) -> Dict[Slot, Slot]:
        """0 joins every under slot to its counterclockwise successor; 1 to its predecessor."""
        through: Dict[Slot, Slot] = {}
        for k in range(4):
            if self.is_under((v, k)):
                j = (k + 1) % 4 if r == 0 else (k - 1) % 4
                through[(v, k)] = (v, j)
                through[(v, j)] = (v, k)
        return through

    def smooth(self, v: int, r: int, keep_orientation: bool = False) -> "SlotGraph":
        return self.splice({v}, self.smoothing_map(v, r), keep_orientation)

    def switch(self, v: int) -> "SlotGraph":
        g = self.copy()
        g.under_even[v] = not g.under_even[v]
        return g

    def remove_straight(self, vertices: Set[int]) -> "SlotGraph":
        return self.splice(set(vertices), _straight(vertices), keep_orientation=True)

    def find_curl(self) -> Optional[Tuple[int, int]]:
        """First (vertex, writhe sign) whose slots k, k+1 are joined by an edge."""
        for v in range(self.n):
            for k in range(4):
                if self.partner[(v, k)] == (v, (k + 1) % 4):
                    return v, 1 if self.is_under((v, k)) else -1
        return None

    def find_bigon(self) -> Optional[Tuple[int, int]]:
        """First pair of vertices bounding a bigon where one strand is over at both ends."""
        for v in range(self.n):
            for k in range(4):
                w, m = self.partner[(v, k)]
                if w == v:
                    continue
                if self.partner[(v, (k - 1) % 4)] != (w, (m + 1) % 4):
                    continue
                if self.is_under((v, k)) == self.is_under((w, m)):
                    return v, w
        return None

    def faces(self) -> List[List[Tuple[Slot, Slot]]]:
        """Faces as lists of (leave slot, arrive slot) edges; each face lies right of its walk."""
        seen: Set[Slot] = set()
        faces = []
        for start in sorted(self.partner):
            arrive = self.partner[start]
            if arrive in seen:
                continue
            face = []
            while arrive not in seen:
                seen.add(arrive)
                leave = (arrive[0], (arrive[1] + 1) % 4)
                nxt = self.partner[leave]
                face.append((leave, nxt))
                arrive = nxt
            faces.append(face)
        return faces

    def split_parts(self) -> List[List[int]]:
        """Vertex sets of the connected parts of the graph."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((v, w) for (v, _), (w, _) in self.partner.items())
        return sorted(sorted(part) for part in nx.connected_components(g))

    # --- canonical encoding ----------------------------------------------------
    def _code_from(self, v0: int, k0: int, oriented: bool) -> tuple:
        ids = {v0: 0}
        base = {v0: k0}
        order = [v0]
        rows = []
        i = 0
        while i < len(order):
            v = order[i]
            b = base[v]
            row = [self.is_under((v, b))]
            if oriented:
                row.append(tuple(sorted((k - b) % 4 for k in self.incoming[v])))
            for r in range(4):
                w, m = self.partner[(v, (b + r) % 4)]
                if w not in ids:
                    ids[w] = len(order)
                    base[w] = m
                    order.append(w)
                row.append((ids[w], (m - base[w]) % 4))
            rows.append(tuple(row))
            i += 1
        return tuple(rows)

    def canonical_key(self, oriented: bool = False) -> tuple:
        """
        Encoding invariant under vertex renumbering and slot rotation.

        Each connected part is encoded by a breadth-first walk from every
        possible start slot, keeping the smallest code.
        """
        if oriented and self.incoming is None:
            raise ValueError("oriented key needs an oriented graph")
        codes = []
        for part in self.split_parts():
            codes.append(min(self._code_from(v, k, oriented) for v in part for k in range(4)))
        return (self.loops, tuple(sorted(codes)))
