# homology.py
import logging
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..diagram import PlanarDiagram
from .complex import build_complex

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


class BigradedDims:
    """Finite map (i, j) -> positive dimension, with the link's component count."""

    __slots__ = ("_dims", "components")

    def __init__(self, dims: Mapping[Cell, int] = None, components: int = 1):
        cleaned = {}
        for (i, j), dim in (dims or {}).items():
            if dim < 0:
                raise ValueError(f"negative dimension {dim} at ({i}, {j})")
            if dim:
                cleaned[(int(i), int(j))] = int(dim)
        self._dims = cleaned
        self.components = components

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], components: int = 1) -> "BigradedDims":
        dims: Dict[Cell, int] = {}
        for i, j, dim in rows:
            dims[(i, j)] = dims.get((i, j), 0) + dim
        return cls(dims, components)

    def __getitem__(self, cell: Cell) -> int:
        return self._dims.get(cell, 0)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self._dims))

    def __len__(self) -> int:
        return len(self._dims)

    def items(self) -> List[Tuple[Cell, int]]:
        return sorted(self._dims.items())

    def rows(self) -> List[List[int]]:
        return [[i, j, dim] for (i, j), dim in self.items()]

    @property
    def total(self) -> int:
        return sum(self._dims.values())

    def max_dim(self) -> int:
        return max(self._dims.values(), default=0)

    def homological_degrees(self) -> List[int]:
        return sorted({i for i, _ in self._dims})

    def quantum_degrees(self) -> List[int]:
        return sorted({j for _, j in self._dims})

    def shift(self, di: int, dj: int) -> "BigradedDims":
        return BigradedDims({(i + di, j + dj): v for (i, j), v in self._dims.items()}, self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigradedDims):
            return NotImplemented
        return self._dims == other._dims and self.components == other.components

    def __hash__(self) -> int:
        return hash((frozenset(self._dims.items()), self.components))

    def __repr__(self) -> str:
        return f"BigradedDims({self.rows()!r}, components={self.components})"


def normalize(raw: BigradedDims, x: int, y: int) -> BigradedDims:
    """Raw cube gradings (r, J) to link gradings (r - x, J + y - 2x)."""
    return raw.shift(-x, y - 2 * x)


def raw_homology_dims(d: PlanarDiagram, cap: Optional[int] = None) -> BigradedDims:
    cx = build_complex(d, cap=cap)
    ranks = {key: cx.block(key).rank() for key in cx.generators}
    dims: Dict[Cell, int] = {}
    for (r, q), gens in cx.generators.items():
        dims[(r, q)] = len(gens) - ranks[(r, q)] - ranks.get((r - 1, q), 0)
    logger.debug("homology of %d-crossing diagram: %s", d.n, dims)
    return BigradedDims(dims, d.component_count)


def homology_dims(d: PlanarDiagram, cap: Optional[int] = None) -> BigradedDims:
    """Rational Khovanov homology H^{i,j} of the oriented link."""
    return normalize(raw_homology_dims(d, cap), d.negatives, d.positives)


def lee_degrees(d: PlanarDiagram, cap: Optional[int] = None) -> List[int]:
    """Homological degrees of Lee homology with multiplicity, ascending."""
    cx = build_complex(d, lee=True, cap=cap)
    ranks = {key: cx.block(key).rank() for key in cx.generators}
    per_degree: Counter = Counter()
    for (r, k), gens in cx.generators.items():
        per_degree[r] += len(gens) - ranks[(r, k)] - ranks.get((r - 1, k), 0)
    degrees = []
    for r in sorted(per_degree):
        degrees += [r - d.negatives] * per_degree[r]
    logger.debug("lee degrees of %d-crossing diagram: %s", d.n, degrees)
    return degrees
