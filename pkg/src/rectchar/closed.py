"""Closed product formulas for rectangle characters on a single cycle.

Write the rectangle as p x q, put n = p q, and track the half-difference
d = (q - p) / 2 together with the half-sum e = (p + q) / 2, so n = e^2 - d^2.
The character of a single cycle splits into four cases by the parity of the
cycle length and the parity of q - p, and in each case it is a fixed
prefactor times a short structured sum times a run of linear factors in n:

  odd cycle 2j-1, q - p even   ->  catalan prefactor and family G
  odd cycle 2j-1, q - p odd    ->  catalan prefactor and family H
  even cycle 2j,  q - p even   ->  central binomial prefactor and family I
  even cycle 2j,  q - p odd    ->  binomial prefactor and family J

Each family member is a polynomial in j and n with integer coefficients,
exposed symbolically by corollary_poly and numerically through
ch_rect_fast, which runs in time polynomial in log n once the cycle length
and q - p are fixed.  closed_char_ed carries the same four sums in the
(e, d) coordinates without splitting off the linear run, which is the form
that matches Stanley's polynomial after the substitution P = E - D,
Q = E + D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ._poly import JNPoly
from .exact import (
    HalfInt,
    catalan,
    double_factorial,
    double_rising_factorial,
    extended_product,
    falling_factorial,
)
from .stanley import stanley_poly, substitute_ed
from .young import Partition

__all__ = [
    "ParityCase",
    "coeff_f",
    "coeff_g",
    "closed_char_ed",
    "corollary_poly",
    "ch_rect_fast",
    "minus_one_row_char",
    "minus_one_col_char",
    "integrality_witness",
    "leading_square_coeff",
]

_FAMILY = {
    ("odd", "even"): "G",
    ("odd", "odd"): "H",
    ("even", "even"): "I",
    ("even", "odd"): "J",
}


@dataclass(frozen=True)
class ParityCase:
    """Which of the four closed formulas applies.

    cycle_parity is the parity of the cycle length, diff_parity the parity
    of q - p.

    >>> ParityCase.of(3, 4).family
    'G'
    >>> ParityCase.of(6, -3).family
    'J'
    """

    cycle_parity: str
    diff_parity: str

    def __post_init__(self) -> None:
        if self.cycle_parity not in ("odd", "even"):
            raise ValueError(f"bad cycle parity {self.cycle_parity!r}")
        if self.diff_parity not in ("even", "odd"):
            raise ValueError(f"bad difference parity {self.diff_parity!r}")

    @classmethod
    def of(cls, k_cycle: int, two_d: int) -> "ParityCase":
        if k_cycle < 1:
            raise ValueError("cycle length must be positive")
        return cls(
            "odd" if k_cycle % 2 else "even",
            "even" if two_d % 2 == 0 else "odd",
        )

    @property
    def family(self) -> str:
        return _FAMILY[(self.cycle_parity, self.diff_parity)]


def coeff_f(j, k: int) -> Fraction:
    """Interior coefficient for the odd-cycle families G and H.

    >>> coeff_f(2, 1)
    Fraction(-6, 1)
    >>> coeff_f(5, 0)
    Fraction(1, 1)
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    sign = -1 if k % 2 else 1
    num = sign * falling_factorial(j, k) * double_rising_factorial(2 * j - 1, k)
    return Fraction(num, factorial(k) * double_factorial(2 * k - 1))


def coeff_g(j, k: int) -> Fraction:
    """Interior coefficient for the even-cycle families I and J.

    >>> coeff_g(1, 1)
    Fraction(-1, 1)
    >>> coeff_g(3, 4)
    Fraction(0, 1)
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    sign = -1 if k % 2 else 1
    num = sign * falling_factorial(j, k) * double_rising_factorial(2 * j + 1, k)
    return Fraction(num, factorial(k) * double_factorial(2 * k + 1))


def _as_fraction(x) -> Fraction:
    if isinstance(x, HalfInt):
        return x.as_fraction()
    return Fraction(x)


def closed_char_ed(k_cycle: int, e, d, diff_parity: str = "even"):
    """Single-cycle rectangle character in the (e, d) coordinates.

    e and d may be integers, fractions, or half-integers.  diff_parity
    selects integer or half-integer shifts in the structured sum; the two
    choices agree identically in e and d, so either evaluates the same
    polynomial.

    >>> closed_char_ed(3, Fraction(2), Fraction(0))
    Fraction(-12, 1)
    >>> closed_char_ed(2, Fraction(5, 2), Fraction(1, 2), "odd")
    Fraction(6, 1)
    """
    if k_cycle < 1:
        raise ValueError("cycle length must be positive")
    if diff_parity not in ("even", "odd"):
        raise ValueError(f"bad difference parity {diff_parity!r}")
    e2 = _as_fraction(e) ** 2
    d2 = _as_fraction(d) ** 2
    half = diff_parity == "odd"
    if k_cycle % 2:
        # shifts 0, 1, ... or 1/2, 3/2, ... depending on diff parity
        j = (k_cycle + 1) // 2
        pref = (-1 if j % 2 == 0 else 1) * catalan(j - 1)
        total = Fraction(0)
        for k in range(j + 1):
            term = coeff_f(j, k)
            for r in range(k):
                term *= d2 - (Fraction((2 * r + 1) ** 2, 4) if half
                              else Fraction(r * r))
            for r in range(k, j):
                term *= e2 - (Fraction((2 * r + 1) ** 2, 4) if half
                              else Fraction(r * r))
            total += term
        return pref * total
    # shifts 1, 2, ... or 1/2, 3/2, ... depending on diff parity
    j = k_cycle // 2
    pref = (-1 if j % 2 == 0 else 1) * comb(2 * j - 1, j)
    total = Fraction(0)
    for k in range(j + 1):
        term = coeff_g(j, k)
        for r in range(1, k + 1):
            term *= d2 - (Fraction((2 * r - 1) ** 2, 4) if half
                          else Fraction(r * r))
        for r in range(k + 1, j + 1):
            term *= e2 - (Fraction((2 * r - 1) ** 2, 4) if half
                          else Fraction(r * r))
        total += term
    return pref * 2 * _as_fraction(d) * total


def _g_value(abs_d: int, j: int, n) -> Fraction:
    total = Fraction(0)
    for k in range(min(j, abs_d) + 1):
        term = coeff_f(j, k)
        for r in range(k):
            term *= abs_d * abs_d - r * r
        for r in range(k, abs_d):
            term *= n + abs_d * abs_d - r * r
        total += term
    return total


def _h_value(abs2d: int, j: int, n) -> Fraction:
    d2 = Fraction(abs2d * abs2d, 4)
    m = (abs2d - 1) // 2
    total = Fraction(0)
    for k in range(min(j, m) + 1):
        term = coeff_f(j, k)
        for r in range(k):
            term *= d2 - Fraction((2 * r + 1) ** 2, 4)
        for r in range(k, m):
            term *= n + d2 - Fraction((2 * r + 1) ** 2, 4)
        total += term
    return total


def _i_value(d: int, j: int, n) -> Fraction:
    if d == 0:
        return Fraction(0)
    ad = abs(d)
    total = Fraction(0)
    for k in range(min(j, ad - 1) + 1):
        term = coeff_g(j, k)
        for r in range(1, k + 1):
            term *= ad * ad - r * r
        for r in range(k + 1, ad):
            term *= n + ad * ad - r * r
        total += term
    return d * total


def _j_value(two_d: int, j: int, n) -> Fraction:
    d2 = Fraction(two_d * two_d, 4)
    m = (abs(two_d) - 1) // 2
    total = Fraction(0)
    for k in range(min(j, m) + 1):
        term = coeff_g(j, k)
        for r in range(1, k + 1):
            term *= d2 - Fraction((2 * r - 1) ** 2, 4)
        for r in range(k + 1, m + 1):
            term *= n + d2 - Fraction((2 * r - 1) ** 2, 4)
        total += term
    return two_d * total


_J = JNPoly({(1, 0): 1})
_N = JNPoly({(0, 1): 1})


def _sym_falling(k: int) -> JNPoly:
    out = JNPoly.constant(1)
    for i in range(k):
        out = out * (_J - i)
    return out


def _sym_double_rising(offset: int, k: int) -> JNPoly:
    out = JNPoly.constant(1)
    for i in range(k):
        out = out * (2 * _J + (offset + 2 * i))
    return out


def _sym_f(k: int) -> JNPoly:
    scale = Fraction(-1 if k % 2 else 1,
                     factorial(k) * double_factorial(2 * k - 1))
    return scale * _sym_falling(k) * _sym_double_rising(-1, k)


def _sym_g(k: int) -> JNPoly:
    scale = Fraction(-1 if k % 2 else 1,
                     factorial(k) * double_factorial(2 * k + 1))
    return scale * _sym_falling(k) * _sym_double_rising(1, k)


def _demote(poly: JNPoly) -> JNPoly:
    terms: dict[tuple[int, int], int] = {}
    for key, c in poly.terms().items():
        frac = Fraction(c)
        if frac.denominator != 1:
            raise ArithmeticError(
                f"non-integer coefficient {frac} at {key} in family polynomial")
        terms[key] = int(frac)
    return JNPoly(terms)


@lru_cache(maxsize=None)
def corollary_poly(two_d: int, cycle_parity: str) -> JNPoly:
    """The family polynomial for the stated half-difference d = two_d / 2.

    cycle_parity "odd" yields the G (two_d even) or H (two_d odd) member,
    cycle_parity "even" the I or J member.  The result is a polynomial in
    J and N with integer coefficients; J stands for the half-length
    parameter of the cycle and N for the diagram size.

    >>> print(corollary_poly(2, "odd"))
    N - 2*J^2 + J + 1
    >>> print(corollary_poly(0, "even"))
    0
    """
    if cycle_parity not in ("odd", "even"):
        raise ValueError(f"bad cycle parity {cycle_parity!r}")
    d2 = Fraction(two_d * two_d, 4)
    if cycle_parity == "odd":
        if two_d % 2 == 0:
            abs_d = abs(two_d) // 2
            total = JNPoly.zero()
            for k in range(abs_d + 1):
                term = _sym_f(k)
                for r in range(k):
                    term = term * Fraction(abs_d * abs_d - r * r)
                for r in range(k, abs_d):
                    term = term * (_N + (abs_d * abs_d - r * r))
                total = total + term
            return _demote(total)
        m = (abs(two_d) - 1) // 2
        total = JNPoly.zero()
        for k in range(m + 1):
            term = _sym_f(k)
            for r in range(k):
                term = term * (d2 - Fraction((2 * r + 1) ** 2, 4))
            for r in range(k, m):
                term = term * (_N + (d2 - Fraction((2 * r + 1) ** 2, 4)))
            total = total + term
        return _demote(total)
    if two_d % 2 == 0:
        d = two_d // 2
        if d == 0:
            return JNPoly.zero()
        ad = abs(d)
        total = JNPoly.zero()
        for k in range(ad):
            term = _sym_g(k)
            for r in range(1, k + 1):
                term = term * Fraction(ad * ad - r * r)
            for r in range(k + 1, ad):
                term = term * (_N + (ad * ad - r * r))
            total = total + term
        return _demote(d * total)
    m = (abs(two_d) - 1) // 2
    total = JNPoly.zero()
    for k in range(m + 1):
        term = _sym_g(k)
        for r in range(1, k + 1):
            term = term * (d2 - Fraction((2 * r - 1) ** 2, 4))
        for r in range(k + 1, m + 1):
            term = term * (_N + (d2 - Fraction((2 * r - 1) ** 2, 4)))
        total = total + term
    return _demote(two_d * total)


def ch_rect_fast(k_cycle: int, p: int, q: int) -> int:
    """Normalized character of the p x q rectangle on a k_cycle-cycle.

    Evaluates the closed product formula; the cost is governed by the
    cycle length and by |q - p|, never by n = p q itself.

    >>> ch_rect_fast(3, 2, 2)
    -12
    >>> ch_rect_fast(3, 2, 5)
    0
    >>> ch_rect_fast(1, 1, 5)
    5
    """
    if k_cycle < 1:
        raise ValueError("cycle length must be positive")
    if p < 1 or q < 1:
        raise ValueError("rectangle sides must be positive")
    n = p * q
    two_d = q - p
    abs2d = abs(two_d)
    if k_cycle % 2:
        j = (k_cycle + 1) // 2
        pref = (-1 if j % 2 == 0 else 1) * catalan(j - 1)
        if two_d % 2 == 0:
            fam = _g_value(abs2d // 2, j, n)
            upper = j - abs2d // 2 - 1
        else:
            fam = _h_value(abs2d, j, n)
            upper = j - (abs2d + 1) // 2
    else:
        j = k_cycle // 2
        if two_d % 2 == 0:
            pref = (-1 if j % 2 == 0 else 1) * comb(2 * j, j)
            fam = _i_value(two_d // 2, j, n)
            upper = j - abs2d // 2
        else:
            pref = (-1 if j % 2 == 0 else 1) * comb(2 * j - 1, j)
            fam = _j_value(two_d, j, n)
            upper = j - (abs2d + 1) // 2
    prod = extended_product(lambda r: n - r * (r + abs2d), upper)
    total = pref * fam * prod
    frac = Fraction(total)
    if frac.denominator != 1:
        raise ArithmeticError(f"non-integer character value {frac}")
    return int(frac)


def minus_one_row_char(k: int, q):
    """Character polynomial of a k-cycle at the formal rectangle (-1) x q.

    >>> minus_one_row_char(3, 4)
    -120
    """
    if k < 1:
        raise ValueError("cycle length must be positive")
    out = -1
    for i in range(k):
        out = out * (q + i)
    return out


def minus_one_col_char(k: int, p):
    """Character polynomial of a k-cycle at the formal rectangle p x (-1).

    >>> minus_one_col_char(3, 4)
    -120
    >>> minus_one_col_char(2, 4)
    20
    """
    if k < 1:
        raise ValueError("cycle length must be positive")
    out = -1 if k % 2 else 1
    for i in range(k):
        out = out * (p + i)
    return out


def integrality_witness(d: int, k: int) -> Fraction:
    """The ratio whose integrality underlies the family coefficients.

    Equals 2 d times the product of d + r over -k < r < k, divided by
    (2 k) factorial.  The value is always an integer for integer d.

    >>> integrality_witness(5, 3)
    Fraction(35, 1)
    >>> integrality_witness(-5, 3)
    Fraction(35, 1)
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    num = 2 * d
    for r in range(-k + 1, k):
        num *= d + r
    return Fraction(num, factorial(2 * k))


def leading_square_coeff(j: int) -> int:
    """Coefficient of E^(2 j) in the (2 j - 1)-cycle character polynomial.

    Substitutes P = E - D, Q = E + D into Stanley's polynomial for a
    single odd cycle and reads off the top coefficient in E, checking it
    against the signed catalan number before returning it.

    >>> leading_square_coeff(2)
    -1
    """
    if j < 1:
        raise ValueError("j must be positive")
    poly = substitute_ed(stanley_poly(Partition((2 * j - 1,))))
    coeff = poly.coefficient(0, 2 * j)
    expected = (-1 if j % 2 == 0 else 1) * catalan(j - 1)
    if coeff != expected:
        raise ArithmeticError(
            f"leading coefficient {coeff} does not match the catalan value "
            f"{expected} at j = {j}")
    return coeff


if __name__ == "__main__":
    import doctest
    doctest.testmod()
