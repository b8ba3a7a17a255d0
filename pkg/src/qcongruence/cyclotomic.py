"""Cyclotomic polynomials and reduction modulo their powers.

``cyclo(n)`` builds the n-th cyclotomic polynomial entirely in integer
arithmetic by dividing q^n - 1 by the cyclotomic polynomials of the proper
divisors of n; every division is checked to be exact.  ``CyclotomicModulus``
bundles an expanded power ``cyclo(n)**k`` with fast residue computation.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .laurent import ZERO, LaurentPoly, monomial, multiplicity


@functools.lru_cache(maxsize=None)
def cyclo(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial.

    >>> print(cyclo(1))
    -1 + q
    >>> print(cyclo(6))
    1 - q + q^2
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = monomial(1, n) - 1
    if n == 1:
        return poly
    for d in range(1, n // 2 + 1):
        if n % d == 0:
            poly, rem = poly.divmod_monic(cyclo(d))
            if not rem.is_zero:
                raise ArithmeticError(f"inexact cyclotomic division at n={n}, d={d}")
    return poly


@functools.lru_cache(maxsize=None)
def _qpow_minus_one_pow(n: int, k: int) -> LaurentPoly:
    """(q^n - 1)^k, kept around because it is a sparse multiple of cyclo(n)**k."""
    return (monomial(1, n) - 1) ** k


@dataclass(frozen=True)
class CyclotomicModulus:
    """The modulus cyclo(n)**k in expanded monic form."""

    n: int
    k: int
    poly: LaurentPoly

    def reduce(self, f: LaurentPoly) -> LaurentPoly:
        """Residue of q^(-min_exp) * f modulo the expanded modulus.

        The q-power normalization is a unit multiple (cyclo(n) has a unit
        constant term), so the residue is zero exactly when f lies in the
        ideal.  Large inputs are first cut down by the sparse multiple
        (q^n - 1)^k, which leaves the final residue unchanged.
        """
        if f.is_zero:
            return ZERO
        g = f.shift(-f.min_exp)
        sparse = _qpow_minus_one_pow(self.n, self.k)
        if g.degree >= 2 * self.n * self.k:
            _, g = g.divmod_monic(sparse)
            if g.is_zero:
                return ZERO
        _, rem = g.divmod_monic(self.poly)
        return rem

    def divides(self, f: LaurentPoly) -> bool:
        return self.reduce(f).is_zero


@functools.lru_cache(maxsize=None)
def cyclo_pow(n: int, k: int) -> CyclotomicModulus:
    """Construct the modulus cyclo(n)**k."""
    if n < 1 or k < 1:
        raise ValueError("cyclotomic modulus needs n >= 1 and k >= 1")
    return CyclotomicModulus(n, k, cyclo(n) ** k)


def congruent_zero(f: LaurentPoly, m: CyclotomicModulus) -> tuple[bool, LaurentPoly]:
    """Whether f is congruent to zero modulo m, plus the residue as witness."""
    rem = m.reduce(f)
    return rem.is_zero, rem


def phi_multiplicity(f: LaurentPoly, n: int) -> int:
    """Multiplicity of cyclo(n) as a factor of the nonzero polynomial f.

    Reduces f by (q^n - 1)^K first: when the residue r is nonzero with
    multiplicity below K, f and r have the same multiplicity because the
    discarded part carries at least K factors.  K doubles in the rare case
    the bound is inconclusive; the loop terminates since eventually
    deg f < n*K and the multiplicity is computed directly.
    """
    if f.is_zero:
        raise ValueError("multiplicity of the zero polynomial is undefined")
    phi = cyclo(n)
    g = f.shift(-f.min_exp)
    K = 4
    while g.degree >= n * K:
        _, r = g.divmod_monic(_qpow_minus_one_pow(n, K))
        if not r.is_zero:
            m = multiplicity(r, phi)
            if m < K:
                return m
        K *= 2
    return multiplicity(g, phi)


def clear_caches() -> None:
    cyclo.cache_clear()
    _qpow_minus_one_pow.cache_clear()
    cyclo_pow.cache_clear()
