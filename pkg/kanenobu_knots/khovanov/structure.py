# structure.py
"""Structural checks on bigraded homology tables."""
import logging
from typing import Dict, Optional

from ..algebra import LaurentPoly1
from ..diagram import PlanarDiagram, resolve
from .homology import BigradedDims, raw_homology_dims

logger = logging.getLogger(__name__)


def euler_characteristic(dims: BigradedDims) -> LaurentPoly1:
    """sum (-1)^i q^j dim H^{i,j}."""
    terms: Dict[int, int] = {}
    for (i, j), dim in dims.items():
        terms[2 * j] = terms.get(2 * j, 0) + (-1) ** (i % 2) * dim
    return LaurentPoly1(terms, "q")


def jones_in_q(v: LaurentPoly1) -> LaurentPoly1:
    """Substitute t^(1/2) = -q."""
    terms: Dict[int, int] = {}
    for e, c in v.terms.items():
        terms[2 * e] = terms.get(2 * e, 0) + (-1) ** (e % 2) * c
    return LaurentPoly1(terms, "q")


def euler_check(dims: BigradedDims, v: LaurentPoly1) -> bool:
    """Graded Euler characteristic equals (q + q^-1) V under t^(1/2) = -q."""
    expected = LaurentPoly1({2: 1, -2: 1}, "q") * jones_in_q(v)
    return euler_characteristic(dims) == expected


def thinness_s(dims: BigradedDims) -> Optional[int]:
    """Centre s of the two adjacent diagonals j - 2i = s -+ 1 carrying all homology, if any."""
    diagonals = sorted({j - 2 * i for i, j in dims})
    if len(diagonals) != 2 or diagonals[1] - diagonals[0] != 2:
        return None
    return diagonals[0] + 1


def knight_move_check(dims: BigradedDims, s: int) -> bool:
    """
    Homology splits into knight-move pairs plus the two Lee cells (0, s -+ 1).

    With L(i) = (i, 2i+s-1) and U(i) = (i, 2i+s+1): dim L(i) = dim U(i+1)
    for i not in {-1, 0}, dim L(0) = dim U(1) + 1, dim U(0) = dim L(-1) + 1.
    """
    if any(j - 2 * i not in (s - 1, s + 1) for i, j in dims):
        return False

    def lower(i):
        return dims[(i, 2 * i + s - 1)]

    def upper(i):
        return dims[(i, 2 * i + s + 1)]

    degrees = dims.homological_degrees() + [-1, 0]
    for i in range(min(degrees) - 2, max(degrees) + 2):
        if i == 0:
            ok = lower(0) == upper(1) + 1
        elif i == -1:
            ok = upper(0) == lower(-1) + 1
        else:
            ok = lower(i) == upper(i + 1)
        if not ok:
            logger.debug("knight move fails at i=%d (s=%d)", i, s)
            return False
    return True


def les_subadditivity_check(d: PlanarDiagram, c: int, cap: Optional[int] = None) -> bool:
    """dim H̄^{i,j}(D) <= dim H̄^{i,j}(D0) + dim H̄^{i-1,j-1}(D1) at crossing c, raw gradings."""
    whole = raw_homology_dims(d, cap)
    zero = raw_homology_dims(resolve(d, c, 0), cap)
    one = raw_homology_dims(resolve(d, c, 1), cap)
    for (i, j), dim in whole.items():
        if dim > zero[(i, j)] + one[(i - 1, j - 1)]:
            logger.debug("exactness bound fails at (%d, %d): %d > %d + %d",
                         i, j, dim, zero[(i, j)], one[(i - 1, j - 1)])
            return False
    return True


def kunneth(a: BigradedDims, b: BigradedDims) -> BigradedDims:
    """Homology of a split union over the rationals: the convolution of the tables."""
    dims: Dict = {}
    for (i1, j1), d1 in a.items():
        for (i2, j2), d2 in b.items():
            cell = (i1 + i2, j1 + j2)
            dims[cell] = dims.get(cell, 0) + d1 * d2
    return BigradedDims(dims, a.components + b.components)


def mirror_dims(dims: BigradedDims) -> BigradedDims:
    return BigradedDims({(-i, -j): v for (i, j), v in dims.items()}, dims.components)


def poincare_polynomial(dims: BigradedDims) -> str:
    """Render as sum of dim * t^i q^j, ascending in i then j."""
    if not len(dims):
        return "0"
    parts = []
    for (i, j), dim in dims.items():
        coeff = "" if dim == 1 else str(dim)
        parts.append(f"{coeff}t^{i}q^{j}")
    return " + ".join(parts)
