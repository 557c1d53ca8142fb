# laurent.py
"""
Exact Laurent polynomials with integer coefficients.

LaurentPoly1 stores exponents in half-units: the key 3 means variable^(3/2).
Jones polynomials of links need t^(1/2); every other caller just uses even
keys. LaurentPoly2 is the two-variable ring Z[a^±1, x^±1] used by the
Kauffman polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

VARIABLE_TAGS = ("A", "t", "q", "x")


def _clean(terms: Mapping) -> Dict:
    return {e: c for e, c in terms.items() if c != 0}


class LaurentPoly1:
    """Immutable Laurent polynomial in one variable, exponents in half-units."""

    __slots__ = ("_terms", "variable")

    def __init__(self, terms: Mapping[int, int] = None, variable: str = "t"):
        if variable not in VARIABLE_TAGS:
            raise ValueError(f"unknown variable tag {variable!r}")
        cleaned = {}
        for e, c in (terms or {}).items():
            if not isinstance(e, int):
                raise TypeError(f"exponent {e!r} is not an integer half-unit count")
            if c:
                cleaned[e] = int(c)
        self._terms = cleaned
        self.variable = variable

    # --- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int, variable: str = "t") -> "LaurentPoly1":
        return cls({0: c}, variable)

    @classmethod
    def monomial(cls, half_exponent: int, coeff: int = 1, variable: str = "t") -> "LaurentPoly1":
        return cls({half_exponent: coeff}, variable)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], lowest: int = 0,
                          variable: str = "t") -> "LaurentPoly1":
        """Coefficients of whole powers lowest, lowest+1, ... of the variable."""
        return cls({2 * (lowest + k): c for k, c in enumerate(coeffs)}, variable)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]], variable: str = "t") -> "LaurentPoly1":
        terms: Dict[int, int] = {}
        for e, c in pairs:
            terms[int(e)] = terms.get(int(e), 0) + int(c)
        return cls(terms, variable)

    # --- access --------------------------------------------------------
    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def pairs(self) -> List[List[int]]:
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    def coefficient(self, half_exponent: int) -> int:
        return self._terms.get(half_exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_exponent(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return Fraction(max(self._terms), 2)

    @property
    def min_exponent(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return Fraction(min(self._terms), 2)

    def has_integer_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    # --- arithmetic ------------------------------------------------------
    def _check(self, other: "LaurentPoly1") -> None:
        if other.variable != self.variable:
            raise ValueError(f"variable mismatch: {self.variable} vs {other.variable}")

    def _coerce(self, other) -> "LaurentPoly1":
        if isinstance(other, int):
            return LaurentPoly1.constant(other, self.variable)
        if isinstance(other, LaurentPoly1):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(_clean(out), self.variable)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly1":
        return LaurentPoly1({e: -c for e, c in self._terms.items()}, self.variable)

    def __sub__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly1":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly1(_clean(out), self.variable)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly1":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly1({-e * (-k): c ** (-k)}, self.variable)
        result = LaurentPoly1.constant(1, self.variable)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, half_units: int) -> "LaurentPoly1":
        """Multiply by variable^(half_units/2)."""
        return LaurentPoly1({e + half_units: c for e, c in self._terms.items()}, self.variable)

    def substitute_inverse(self) -> "LaurentPoly1":
        return LaurentPoly1({-e: c for e, c in self._terms.items()}, self.variable)

    def rescale(self, numerator: int, denominator: int = 1, variable: str = None) -> "LaurentPoly1":
        """Substitute variable -> new_variable^(numerator/denominator); must stay in half-units."""
        out: Dict[int, int] = {}
        for e, c in self._terms.items():
            if (e * numerator) % denominator:
                raise ValueError(f"exponent {e}/2 does not rescale by {numerator}/{denominator}")
            ne = e * numerator // denominator
            out[ne] = out.get(ne, 0) + c
        return LaurentPoly1(_clean(out), variable or self.variable)

    # --- comparison --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly1.constant(other, self.variable)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self.variable == other.variable and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variable, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.pairs()!r}, variable={self.variable!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                mono = ""
            elif e == 2:
                mono = self.variable
            elif e % 2 == 0 and e > 0:
                mono = f"{self.variable}^{e // 2}"
            else:
                power = str(e // 2) if e % 2 == 0 else f"{e}/2"
                mono = f"{self.variable}^({power})"
            if mono and abs(c) == 1:
                text = mono
            else:
                text = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


def breadth(p: LaurentPoly1) -> Fraction:
    """Difference between the largest and smallest exponent, in whole variable units."""
    if p.is_zero():
        raise ValueError("breadth of the zero polynomial is undefined")
    return p.max_exponent - p.min_exponent


def poly_mul(p: LaurentPoly1, q: LaurentPoly1) -> LaurentPoly1:
    return p * q


class LaurentPoly2:
    """Immutable Laurent polynomial in a and x; keys are (e_a, e_x) integer pairs."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], int] = None):
        self._terms = {(int(ea), int(ex)): int(c) for (ea, ex), c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, ea: int, ex: int, coeff: int = 1) -> "LaurentPoly2":
        return cls({(ea, ex): coeff})

    @property
    def terms(self) -> Dict[Tuple[int, int], int]:
        return dict(self._terms)

    def pairs(self) -> List[List[int]]:
        return [[ea, ex, self._terms[(ea, ex)]] for ea, ex in sorted(self._terms)]

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2.constant(other)
        if isinstance(other, LaurentPoly2):
            return other
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Tuple[int, int], int] = {}
        for (a1, x1), c1 in self._terms.items():
            for (a2, x2), c2 in other._terms.items():
                key = (a1 + a2, x1 + x2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial()")
        result = LaurentPoly2.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, da: int = 0, dx: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(ea + da, ex + dx): c for (ea, ex), c in self._terms.items()})

    def specialize_a(self, value: int = 1) -> LaurentPoly1:
        """Set a = value (±1) and return a polynomial in x."""
        if value not in (1, -1):
            raise ValueError("a can only be specialised to a unit")
        out: Dict[int, int] = {}
        for (ea, ex), c in self._terms.items():
            out[2 * ex] = out.get(2 * ex, 0) + c * (value ** (ea % 2))
        return LaurentPoly1(_clean(out), "x")

    @property
    def max_x_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(ex for _, ex in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.pairs()!r})"
