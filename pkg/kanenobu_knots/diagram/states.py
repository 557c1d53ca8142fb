# states.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from networkx.utils import UnionFind

from ..errors import DiagramError
from .planar import PlanarDiagram


def smoothing_pairs(crossing: Sequence[int], r: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Arc pairs glued by the r-smoothing: 0 joins (a,b),(c,d); 1 joins (a,d),(b,c)."""
    a, b, c, d = crossing
    return ((a, b), (c, d)) if r == 0 else ((a, d), (b, c))


def state_circles(d: PlanarDiagram, choice: Sequence[int]) -> List[frozenset]:
    """Circles of a complete smoothing as arc-label sets, ordered by smallest label."""
    if len(choice) != d.n:
        raise DiagramError("index", f"choice has length {len(choice)}, diagram has {d.n} crossings")
    uf = UnionFind(range(1, 2 * d.n + 1))
    for crossing, r in zip(d.crossings, choice):
        for x, y in smoothing_pairs(crossing, r):
            uf.union(x, y)
    return sorted((frozenset(s) for s in uf.to_sets()), key=min)


def circle_count(d: PlanarDiagram, choice: Sequence[int]) -> int:
    return len(state_circles(d, choice)) + d.loops


@dataclass(frozen=True)
class ResolutionState:
    diagram: PlanarDiagram
    choice: Tuple[int, ...]
    circles: int

    @classmethod
    def of(cls, diagram: PlanarDiagram, choice: Sequence[int]) -> "ResolutionState":
        choice = tuple(int(r) for r in choice)
        return cls(diagram, choice, circle_count(diagram, choice))

    def flip(self, c: int) -> "ResolutionState":
        choice = list(self.choice)
        choice[c] = 1 - choice[c]
        return ResolutionState.of(self.diagram, choice)


def circle_index(circles: List[frozenset]) -> Dict[int, int]:
    """Arc label -> position of its circle."""
    return {arc: i for i, circle in enumerate(circles) for arc in circle}
