# complex.py
"""
Cube-of-resolutions complex over the rationals.

A generator is a cube vertex v in {0,1}^n together with a labelling of the
state circles by 1 (bit 0) or X (bit 1). In the raw convention its
homological degree is |v| and its quantum degree is #1 - #X + |v|. The
edge v -> v' that turns crossing c from 0 to 1 carries the sign
(-1)^(number of 1s of v before c) and the multiplication or
comultiplication of the Frobenius algebra Q[X]/(X^2) (Khovanov) or
Q[X]/(X^2 - 1) (Lee).
"""
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..algebra import SparseMatrixQ
from ..config import settings
from ..diagram import PlanarDiagram
from ..diagram.states import circle_index, state_circles
from ..errors import CapExceededError

logger = logging.getLogger(__name__)

Vertex = Tuple[int, ...]
Generator = Tuple[Vertex, int]
BlockKey = Tuple[int, int]

ONE, X = 0, 1


def _merge(a: int, b: int, lee: bool) -> List[Tuple[int, int]]:
    if a == ONE:
        return [(b, 1)]
    if b == ONE:
        return [(a, 1)]
    return [(ONE, 1)] if lee else []


def _split(a: int, lee: bool) -> List[Tuple[int, int, int]]:
    if a == ONE:
        return [(ONE, X, 1), (X, ONE, 1)]
    out = [(X, X, 1)]
    if lee:
        out.append((ONE, ONE, 1))
    return out


@dataclass
class _VertexData:
    circles: List[frozenset]
    index: Dict[int, int]
    count: int


@dataclass
class GradedComplex:
    """
    Generators and differential blocks of the cube complex.

    Blocks are keyed by (raw homological degree, quantum key); the quantum key
    is the raw quantum degree for Khovanov and that degree mod 4 for Lee, so
    every differential block maps (r, k) to (r + 1, k).
    """

    diagram: PlanarDiagram
    lee: bool
    generators: Dict[BlockKey, List[Generator]] = field(default_factory=dict)
    blocks: Dict[BlockKey, SparseMatrixQ] = field(default_factory=dict)
    circle_counts: Dict[Vertex, int] = field(default_factory=dict)

    @property
    def x(self) -> int:
        return self.diagram.negatives

    @property
    def y(self) -> int:
        return self.diagram.positives

    def quantum(self, gen: Generator) -> int:
        vertex, mask = gen
        return self.circle_counts[vertex] - 2 * bin(mask).count("1") + sum(vertex)

    def generator_count(self, key: BlockKey) -> int:
        return len(self.generators.get(key, ()))

    def block(self, key: BlockKey) -> SparseMatrixQ:
        r, k = key
        if key in self.blocks:
            return self.blocks[key]
        return SparseMatrixQ.zero(self.generator_count((r + 1, k)), self.generator_count(key))

    def degrees(self) -> List[int]:
        return sorted({r for r, _ in self.generators})

    def d_squared_is_zero(self) -> bool:
        for (r, k) in self.generators:
            if not self.block((r + 1, k)).matmul(self.block((r, k))).is_zero():
                return False
        return True

    def preserves_grading(self) -> bool:
        """Every Khovanov matrix entry joins generators of equal quantum degree."""
        for (r, k), m in self.blocks.items():
            sources = self.generators[(r, k)]
            targets = self.generators[(r + 1, k)]
            for row, col, _ in m.entries:
                shift = self.quantum(targets[row]) - self.quantum(sources[col])
                if shift != 0 and not (self.lee and shift == 4):
                    return False
        return True


def build_complex(d: PlanarDiagram, lee: bool = False, cap: Optional[int] = None) -> GradedComplex:
    if cap is None:
        cap = settings.LEE_MAX_CROSSINGS if lee else settings.KHOVANOV_MAX_CROSSINGS
    if d.n > cap:
        raise CapExceededError("lee" if lee else "khovanov", d.n, cap)

    vertices: Dict[Vertex, _VertexData] = {}
    for v in itertools.product((0, 1), repeat=d.n):
        circles = state_circles(d, v)
        vertices[v] = _VertexData(circles, circle_index(circles), len(circles) + d.loops)

    cx = GradedComplex(d, lee, circle_counts={v: data.count for v, data in vertices.items()})
    position: Dict[Generator, int] = {}
    for v, data in vertices.items():
        for mask in range(1 << data.count):
            gen = (v, mask)
            q = cx.quantum(gen)
            key = (sum(v), q % 4 if lee else q)
            bucket = cx.generators.setdefault(key, [])
            position[gen] = len(bucket)
            bucket.append(gen)

    entries: Dict[BlockKey, Dict[Tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
    for v, data in vertices.items():
        for c in range(d.n):
            if v[c]:
                continue
            w = v[:c] + (1,) + v[c + 1:]
            target = vertices[w]
            sign = -1 if sum(v[:c]) % 2 else 1
            _edge(cx, d, c, v, data, w, target, sign, position, entries)

    for key, values in entries.items():
        r, k = key
        cx.blocks[key] = SparseMatrixQ.from_dict(cx.generator_count((r + 1, k)),
                                                 cx.generator_count(key), values)
    logger.debug("%s complex: %d crossings, %d generators, %d blocks",
                 "lee" if lee else "khovanov", d.n, len(position), len(cx.blocks))
    return cx


def _edge(cx, d, c, v, data, w, target, sign, position, entries) -> None:
    crossing = d.crossings[c]
    old = sorted({data.index[a] for a in crossing})
    new = sorted({target.index[a] for a in crossing})
    n_old = len(data.circles)
    # untouched circles (and free loops) keep their label
    carry = {}
    for i, circle in enumerate(data.circles):
        if i not in old:
            carry[i] = target.index[next(iter(circle))]
    for t in range(d.loops):
        carry[n_old + t] = len(target.circles) + t

    for mask in range(1 << data.count):
        base = 0
        for i, j in carry.items():
            if mask >> i & 1:
                base |= 1 << j
        if len(old) == 2:
            images = [(base | (lab << new[0]), coeff)
                      for lab, coeff in _merge(mask >> old[0] & 1, mask >> old[1] & 1, cx.lee)]
        else:
            images = [(base | (l1 << new[0]) | (l2 << new[1]), coeff)
                      for l1, l2, coeff in _split(mask >> old[0] & 1, cx.lee)]
        src = (v, mask)
        q = cx.quantum(src)
        key = (sum(v), q % 4 if cx.lee else q)
        col = position[src]
        for out_mask, coeff in images:
            row = position[(w, out_mask)]
            entries[key][(row, col)] += sign * coeff
