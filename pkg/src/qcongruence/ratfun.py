"""Formal quotients of Laurent polynomials.

Fractions are never reduced by polynomial gcd; only the q-power content of
the denominator is normalized away.  All decisions that matter (equality,
congruence) go through cross-multiplication or through the valuation with
respect to a cyclotomic polynomial, so unreduced representations are fine.
"""
from __future__ import annotations

import math

from .cyclotomic import phi_multiplicity
from .laurent import ONE, LaurentPoly


class RatFun:
    """num/den with a nonzero denominator; equality by cross-multiplication.

    >>> a = RatFun(LaurentPoly((-1, 0, 1)), LaurentPoly((-1, 1)))  # (q^2-1)/(q-1)
    >>> a == RatFun(LaurentPoly((1, 1)))                           # equals 1 + q
    True
    """

    __slots__ = ("num", "den")

    num: LaurentPoly
    den: LaurentPoly

    def __init__(self, num: LaurentPoly | int, den: LaurentPoly | int = ONE):
        if isinstance(num, int):
            num = LaurentPoly((num,))
        if isinstance(den, int):
            den = LaurentPoly((den,))
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        # Strip the common q-power unit so the denominator is ordinary.
        if den.min_exp != 0:
            num = num.shift(-den.min_exp)
            den = den.shift(-den.min_exp)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        raise TypeError("RatFun is not hashable (equality is extensional)")

    def __add__(self, other) -> "RatFun":
        if isinstance(other, (int, LaurentPoly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        if other.den.is_one:
            return RatFun(self.num + other.num * self.den, self.den)
        if self.den.is_one:
            return RatFun(self.num * other.den + other.num, other.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> "RatFun":
        if isinstance(other, (int, LaurentPoly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return (-self) + other

    def __mul__(self, other) -> "RatFun":
        if isinstance(other, (int, LaurentPoly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if self.den.is_one:
            return f"RatFun('{self.num}')"
        return f"RatFun('({self.num}) / ({self.den})')"


def as_ratfun(value: RatFun | LaurentPoly | int) -> RatFun:
    if isinstance(value, RatFun):
        return value
    return RatFun(value)


def valuation(r: RatFun, n: int) -> int | float:
    """Order of vanishing of r at the n-th cyclotomic polynomial.

    Multiplicity in the numerator minus multiplicity in the denominator;
    +inf for the zero function, negative for a pole.
    """
    if r.num.is_zero:
        return math.inf
    num_mult = phi_multiplicity(r.num, n)
    den_mult = 0 if r.den.is_one else phi_multiplicity(r.den, n)
    return num_mult - den_mult


def valuation_diff(a: RatFun, b: RatFun, n: int) -> int | float:
    """Valuation of a - b at cyclo(n); +inf when a and b are equal.

    A congruence modulo cyclo(n)**k between rational functions holds
    exactly when this is >= k.
    """
    return valuation(a - b, n)
