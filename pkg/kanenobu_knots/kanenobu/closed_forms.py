# closed_forms.py
"""Closed forms for the Kanenobu family K(p, q)."""
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from ..algebra import LaurentPoly1, breadth
from ..khovanov import BigradedDims
from .tables import T0

logger = logging.getLogger(__name__)

FIG8_JONES = LaurentPoly1.from_coefficients([1, -1, 1, -1, 1], lowest=-2)
V00 = FIG8_JONES * FIG8_JONES

Q_8_8 = LaurentPoly1.from_coefficients([1, 4, 6, -10, -14, 4, 8, 2], variable="x")
Q_8_9 = LaurentPoly1.from_coefficients([-7, 4, 16, -10, -16, 4, 8, 2], variable="x")

_X = LaurentPoly1.monomial(2, 1, "x")


def jones_closed_form(p: int, q: int) -> LaurentPoly1:
    """V(K(p,q)) = (-t)^(p+q) (V(K(0,0)) - 1) + 1."""
    s = p + q
    return LaurentPoly1.monomial(2 * s, -1 if s % 2 else 1) * (V00 - 1) + 1


def breadth_closed_form(p: int, q: int) -> int:
    """8 while |p+q| <= 4, then |p+q| + 4."""
    s = abs(p + q)
    return 8 if s <= 4 else s + 4


def jones_crossing_lower_bound(p: int, q: int) -> int:
    """Span of the Jones closed form, a lower bound for c(K(p,q))."""
    return int(breadth(jones_closed_form(p, q)))


@lru_cache(maxsize=None)
def _chebyshev(k: int) -> LaurentPoly1:
    """S_k(x) with S_-1 = 0, S_0 = 1, S_k = x S_(k-1) - S_(k-2)."""
    if k == -1:
        return LaurentPoly1({}, "x")
    if k == 0:
        return LaurentPoly1.constant(1, "x")
    return _X * _chebyshev(k - 1) - _chebyshev(k - 2)


def sigma(n: int) -> LaurentPoly1:
    """(alpha^n - beta^n)/(alpha - beta) with alpha + beta = x, alpha beta = 1."""
    if n == 0:
        return LaurentPoly1({}, "x")
    value = _chebyshev(abs(n) - 1)
    return value if n > 0 else -value


def q_closed_form(p: int, q: int) -> LaurentPoly1:
    twisted = sigma(p + 1) * sigma(q + 1) + sigma(p - 1) * sigma(q - 1)
    # Q(8_8) - 1 has no constant term, so dividing by x is exact
    over_x = (twisted * (Q_8_8 - 1)).shift(-2)
    result = -(sigma(p) * sigma(q)) * (Q_8_9 - 1) + over_x + 1
    if result.min_exponent < 0:
        raise ArithmeticError(f"Q closed form for ({p}, {q}) kept a negative power of x")
    return result


def q_degree_closed_form(p: int, q: int) -> int:
    return abs(p) + abs(q) + (6 if p * q >= 0 else 5)


def _without_lee_cells(table: BigradedDims) -> dict:
    cells = dict(table.items())
    for cell in ((0, -1), (0, 1)):
        cells[cell] = cells.get(cell, 0) - 1
    return cells


def khovanov_closed_form(p: int, q: int) -> BigradedDims:
    """
    Khovanov table of K(p, q); depends on s = p + q only.

    For s < 0 the K(0,0) table minus its two Lee cells is shifted by
    (s, 2s) and the Lee cells are put back at (0, -+1). s > 0 is the mirror
    of -s.
    """
    s = p + q
    if s == 0:
        return T0
    if s > 0:
        negative = khovanov_closed_form(-s, 0)
        return BigradedDims({(-i, -j): v for (i, j), v in negative.items()}, 1)
    cells: dict = defaultdict(int)
    for (i, j), v in _without_lee_cells(T0).items():
        cells[(i + s, j + 2 * s)] += v
    cells[(0, -1)] += 1
    cells[(0, 1)] += 1
    return BigradedDims(cells, 1)


@dataclass(frozen=True)
class DistinctionClass:
    """Grid points sharing one Khovanov table, with how many distinct Q polynomials they show."""

    total_twist: int
    members: Tuple[Tuple[int, int], ...]
    distinct_q: int
    khovanov_total: int


def khovanov_distinction(max_abs: int) -> List[DistinctionClass]:
    """Classes of |p|,|q| <= max_abs with equal Khovanov closed form, ordered by p + q."""
    groups = defaultdict(list)
    for p in range(-max_abs, max_abs + 1):
        for q in range(-max_abs, max_abs + 1):
            groups[khovanov_closed_form(p, q)].append((p, q))
    out = []
    for table, members in groups.items():
        s = members[0][0] + members[0][1]
        distinct = {q_closed_form(p, q) for p, q in members}
        out.append(DistinctionClass(s, tuple(sorted(members)), len(distinct), table.total))
    out.sort(key=lambda c: c.total_twist)
    logger.debug("khovanov distinction over |p|,|q| <= %d: %d classes", max_abs, len(out))
    return out
