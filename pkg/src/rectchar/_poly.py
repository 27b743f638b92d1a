"""Sparse exact bivariate polynomials.

One representation serves three rings: rectangle characters live in Z[P,Q],
their recentered form in Q[D,E] with D half the side difference and E half
the side sum, and the product-form coefficient families in (J,N) with J the
half-cycle index and N the box count (graded with deg J = 1, deg N = 2).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["BiPoly", "DEPoly", "JNPoly"]

Coeff = Union[int, Fraction]
Key = "tuple[int, int]"


class _Poly2:
    """Shared core: an exponent-pair to coefficient map with ring operations."""

    VARS = ("X", "Y")
    __slots__ = ("_terms",)

    def __init__(self, terms: "Mapping | Iterable" = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for (i, j), c in items:
            i = int(i)
            j = int(j)
            if i < 0 or j < 0:
                raise ValueError("exponents must be non-negative")
            value = acc.get((i, j), 0) + c
            if value == 0:
                acc.pop((i, j), None)
            else:
                acc[(i, j)] = value
        self._terms = acc

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c: Coeff):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Coeff = 1):
        return cls({(i, j): c})

    # queries ----------------------------------------------------------------

    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> Coeff:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        """Largest exponent sum; -1 for the zero polynomial."""
        return max((i + j for (i, j) in self._terms), default=-1)

    def evaluate(self, x, y):
        total = 0
        for (i, j), c in self._terms.items():
            total += c * x ** i * y ** j
        return total

    # ring operations ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, _Poly2):
            if type(other) is not type(self):
                raise TypeError(
                    f"cannot mix {type(self).__name__} with {type(other).__name__}")
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        merged = dict(self._terms)
        for key, c in rhs._terms.items():
            value = merged.get(key, 0) + c
            if value == 0:
                merged.pop(key, None)
            else:
                merged[key] = value
        out = type(self).zero()
        out._terms = merged
        return out

    __radd__ = __add__

    def __neg__(self):
        out = type(self).zero()
        out._terms = {key: -c for key, c in self._terms.items()}
        return out

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return type(self).zero()
            out = type(self).zero()
            out._terms = {key: c * other for key, c in self._terms.items()}
            return out
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in rhs._terms.items():
                key = (i1 + i2, j1 + j2)
                value = acc.get(key, 0) + c1 * c2
                if value == 0:
                    acc.pop(key, None)
                else:
                    acc[key] = value
        out = type(self).zero()
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        out = type(self).constant(1)
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    # comparison and text -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _Poly2):
            return type(self) is type(other) and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0, 0): other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def _sort_key(self, key):
        i, j = key
        return (-i, -j)

    def _monomial_text(self, i: int, j: int) -> str:
        pieces = []
        if i:
            pieces.append(self.VARS[0] if i == 1 else f"{self.VARS[0]}^{i}")
        if j:
            pieces.append(self.VARS[1] if j == 1 else f"{self.VARS[1]}^{j}")
        return "*".join(pieces)

    def _term_text(self, coeff: Coeff, mono: str) -> str:
        # explicit coefficient on every term, matching "-1*P^2*Q + 1*P*Q^2"
        if not mono:
            return str(coeff)
        return f"{coeff}*{mono}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))
        chunks = []
        for key, c in ordered:
            mono = self._monomial_text(*key)
            if not chunks:
                chunks.append(self._term_text(c, mono))
            elif c < 0:
                chunks.append("- " + self._term_text(-c, mono))
            else:
                chunks.append("+ " + self._term_text(c, mono))
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._terms!r})"


class BiPoly(_Poly2):
    """Polynomial in the rectangle sides: P rows, Q columns, integer coefficients."""

    VARS = ("P", "Q")

    def swap(self) -> "BiPoly":
        """Exchange the two variables."""
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def substitute_p(self, value) -> dict:
        """Coefficients in Q after setting P to a number; zeros dropped."""
        out: dict = {}
        for (i, j), c in self._terms.items():
            v = out.get(j, 0) + c * value ** i
            if v == 0:
                out.pop(j, None)
            else:
                out[j] = v
        return out

    def substitute_q(self, value) -> dict:
        """Coefficients in P after setting Q to a number; zeros dropped."""
        out: dict = {}
        for (i, j), c in self._terms.items():
            v = out.get(i, 0) + c * value ** j
            if v == 0:
                out.pop(i, None)
            else:
                out[i] = v
        return out


class DEPoly(_Poly2):
    """Polynomial in D (half side difference) and E (half side sum)."""

    VARS = ("D", "E")

    def d_degree(self) -> int:
        return max((i for (i, _) in self._terms), default=-1)

    def e_degree(self) -> int:
        return max((j for (_, j) in self._terms), default=-1)

    def is_even_in_d(self) -> bool:
        return all(i % 2 == 0 for (i, _) in self._terms)

    def is_odd_in_d(self) -> bool:
        return all(i % 2 == 1 for (i, _) in self._terms)


class JNPoly(_Poly2):
    """Polynomial in J (half-cycle index) and N (box count).

    The natural grading gives J degree 1 and N degree 2.  Canonical text
    sorts terms by that weighted degree, descending, breaking ties by N
    degree and then J degree; unit coefficients are left implicit.
    """

    VARS = ("J", "N")

    def weighted_degree(self) -> int:
        """Largest value of j_exp + 2 n_exp; -1 for the zero polynomial."""
        return max((i + 2 * j for (i, j) in self._terms), default=-1)

    def _sort_key(self, key):
        i, j = key
        return (-(i + 2 * j), -j, -i)

    def _term_text(self, coeff: Coeff, mono: str) -> str:
        if not mono:
            return str(coeff)
        if coeff == 1:
            return mono
        if coeff == -1:
            return f"-{mono}"
        return f"{coeff}*{mono}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))
        chunks = []
        for key, c in ordered:
            mono = self._monomial_text(*key)
            if not chunks:
                chunks.append(self._term_text(c, mono))
            elif c < 0:
                chunks.append("- " + self._term_text(-c, mono))
            else:
                chunks.append("+ " + self._term_text(c, mono))
        return " ".join(chunks)
