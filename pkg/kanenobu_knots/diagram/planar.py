# planar.py
"""
PlanarDiagram: a link diagram as a PD code.

Each crossing is a 4-tuple of arc labels listed counterclockwise from the
incoming under-strand. Labels run 1..2n, consecutively along each oriented
component. A crossing is positive when its over-strand leaves through the
second position, i.e. runs from the fourth label to the second.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from ..errors import DiagramError

Crossing = Tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: Tuple[Crossing, ...]
    signs: Tuple[int, ...]
    loops: int = 0
    _key: list = field(default_factory=list, init=False, repr=False, compare=False)

    # --- constructors ---------------------------------------------------
    @classmethod
    def unknot(cls) -> "PlanarDiagram":
        return cls((), (), 1)

    @classmethod
    def from_pd(cls, crossings: Iterable[Sequence[int]], signs: Optional[Sequence[int]] = None,
                loops: int = 0) -> "PlanarDiagram":
        """Build a diagram, inferring signs from the labeling when they are not given."""
        crossings = tuple(tuple(int(a) for a in c) for c in crossings)
        if signs is None:
            signs = infer_signs(crossings)
        diagram = cls(crossings, tuple(int(s) for s in signs), loops)
        diagram.validate()
        return diagram

    # --- counts ------------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def positives(self) -> int:
        """y(D)"""
        return sum(1 for s in self.signs if s > 0)

    @property
    def negatives(self) -> int:
        """x(D)"""
        return sum(1 for s in self.signs if s < 0)

    x = negatives
    y = positives

    @property
    def writhe(self) -> int:
        return self.positives - self.negatives

    @property
    def component_count(self) -> int:
        return len(self.graph().traverse()) + self.loops

    def over_in_position(self, c: int) -> int:
        return 3 if self.signs[c] > 0 else 1

    def graph(self):
        from .graph import SlotGraph
        return SlotGraph.from_diagram(self)

    def canonical_key(self) -> tuple:
        """Orientation-aware encoding independent of labels and crossing order."""
        if not self._key:
            self._key.append(self.graph().canonical_key(oriented=True))
        return self._key[0]

    def label_sequences(self) -> List[List[int]]:
        """Arc labels in traversal order, one list per component with crossings."""
        head: Dict[int, Tuple[int, int]] = {}
        for c, crossing in enumerate(self.crossings):
            for pos in (0, self.over_in_position(c)):
                head[crossing[pos]] = (c, pos)
        seen = set()
        out = []
        for start in sorted(head):
            if start in seen:
                continue
            seq = []
            label = start
            while label not in seen:
                seen.add(label)
                seq.append(label)
                c, pos = head[label]
                label = self.crossings[c][(pos + 2) % 4]
            out.append(seq)
        return out

    # --- validation ----------------------------------------------------------
    def validate(self) -> "PlanarDiagram":
        problems: List[Tuple[str, str]] = []
        for i, crossing in enumerate(self.crossings):
            if len(crossing) != 4 or any((not isinstance(a, int)) or a < 1 for a in crossing):
                problems.append(("tuple-shape", f"crossing {i} is not four positive labels: {crossing}"))
        if len(self.signs) != self.n or any(s not in (1, -1) for s in self.signs):
            problems.append(("tuple-shape", "one sign in {+1, -1} is required per crossing"))
        if self.loops < 0:
            problems.append(("tuple-shape", "loop count is negative"))
        if problems:
            raise DiagramError(problems[0][0], problems[0][1], problems)

        counts = Counter(a for c in self.crossings for a in c)
        for label, k in sorted(counts.items()):
            if k != 2:
                problems.append(("arc-multiplicity", f"arc {label} appears {k} time(s)"))
        if set(counts) != set(range(1, 2 * self.n + 1)):
            problems.append(("labeling", f"arc labels must be exactly 1..{2 * self.n}"))

        if not problems:
            heads = Counter()
            tails = Counter()
            for c, crossing in enumerate(self.crossings):
                o_in = self.over_in_position(c)
                for pos in range(4):
                    (heads if pos in (0, o_in) else tails)[crossing[pos]] += 1
            bad = sorted(a for a in counts if heads[a] != 1 or tails[a] != 1)
            if bad:
                problems.append(("orientation", f"arcs {bad} are not oriented consistently "
                                                f"by the crossing signs"))
            else:
                for seq in self.label_sequences():
                    lo = min(seq)
                    rotated = seq[seq.index(lo):] + seq[:seq.index(lo)]
                    if rotated != list(range(lo, lo + len(seq))):
                        problems.append(("labeling", f"component {rotated} is not numbered "
                                                     f"consecutively"))
        if self.n == 0 and self.loops == 0:
            problems.append(("components", "diagram has no components"))
        if problems:
            raise DiagramError(problems[0][0], problems[0][1], problems)
        return self


def infer_signs(crossings: Sequence[Crossing]) -> Tuple[int, ...]:
    """Crossing signs from a consecutive labeling; two-arc components are ambiguous."""
    uf = UnionFind()
    for a, b, c, d in crossings:
        uf.union(a, c)
        uf.union(b, d)
    span: Dict[object, Tuple[int, int]] = {}
    for group in uf.to_sets():
        span[uf[next(iter(group))]] = (min(group), max(group))

    def succ(label: int) -> int:
        lo, hi = span[uf[label]]
        return label + 1 if label < hi else lo

    signs = []
    for i, (a, b, c, d) in enumerate(crossings):
        forward, backward = b == succ(d), d == succ(b)
        if forward == backward:
            raise DiagramError("orientation", f"crossing {i} {crossings[i]}: over-strand "
                                              f"direction is ambiguous, give signs explicitly")
        signs.append(1 if forward else -1)
    return tuple(signs)
