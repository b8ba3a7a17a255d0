"""q-analogues and integer combinatorics used by the congruence checks.

Everything returns exact ``LaurentPoly`` values or Python integers.  The
Gaussian binomials come from the Pascal-style recurrence

    [n, k] = [n-1, k-1] + q^k * [n-1, k]

filled iteratively into a shared memo table, which keeps the construction
division-free and lets overlapping requests reuse each other's work.  The
memo only ever grows with immutable values, so concurrent readers are safe;
a racing writer at worst recomputes an entry.
"""
from __future__ import annotations

import functools
import math

from .laurent import ONE, ZERO, LaurentPoly, monomial


class IntegralityError(ArithmeticError):
    """A q-power exponent that had to be an integer was not.

    Raised by ``symbol_monomial`` when a nonzero Legendre symbol meets a
    non-integral exponent; this never happens for parameters satisfying the
    divisibility facts the closed forms rely on, so it signals misuse or a
    falsified assumption and must not be silenced.
    """


def one_minus_qpow(e: int) -> LaurentPoly:
    """1 - q^e for e >= 1."""
    if e < 1:
        raise ValueError("exponent must be positive")
    return ONE - monomial(1, e)


def qint(m: int) -> LaurentPoly:
    """The q-integer 1 + q + ... + q^(m-1); zero for m = 0."""
    if m < 0:
        raise ValueError("q-integer of a negative integer")
    return LaurentPoly((1,) * m)


@functools.lru_cache(maxsize=None)
def qpoch(n: int) -> LaurentPoly:
    """(q; q)_n, the product (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    if n == 0:
        return ONE
    return qpoch(n - 1) * one_minus_qpow(n)


_qbinom_memo: dict[tuple[int, int], LaurentPoly] = {}


def qbinom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial coefficient; zero unless 0 <= k <= n.

    >>> print(qbinom(4, 2))
    1 + q + 2*q^2 + q^3 + q^4
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    memo = _qbinom_memo
    got = memo.get((n, k))
    if got is not None:
        return got
    # Fill the wedge of entries the recurrence can reach, bottom row up.
    # Row m only needs columns within distance n-m of k on the left and
    # within k of the diagonal, which keeps the table at O(n * min(k, n-k)).
    for m in range(2, n + 1):
        for c in range(max(1, k - (n - m)), min(k, m - 1) + 1):
            if (m, c) not in memo:
                upper = memo[(m - 1, c)] if c <= m - 2 else (ONE if c == m - 1 else ZERO)
                left = memo[(m - 1, c - 1)] if 1 <= c - 1 <= m - 2 else ONE
                memo[(m, c)] = left + upper.shift(c)
    return memo[(n, k)]


def qbinom_cache_size() -> int:
    return len(_qbinom_memo)


def qtrinom(n: int, j: int) -> LaurentPoly:
    """q-analogue of the trinomial coefficient, as a k-indexed sum
    of q^(k(k+j)) [n, k] [n-k, k+j].

    Terms whose inner Gaussian binomial is out of range vanish, which also
    gives the sum a meaning for j below -n or above n (it is then zero).

    >>> print(qtrinom(2, 0))
    1 + q + q^2
    """
    if n < 0:
        raise ValueError("row index must be nonnegative")
    total = ZERO
    for k in range(n + 1):
        if k + j < 0 or k + j > n - k:
            continue
        total = total + (qbinom(n, k) * qbinom(n - k, k + j)).shift(k * (k + j))
    return total


def binom(a: int, b: int) -> int:
    """Integer binomial coefficient with the usual extensions.

    Zero for b < 0 or (a >= 0 and b > a); for negative a it is the
    generalized value (-1)^b * C(b - a - 1, b).
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) if b <= a else 0
    value = math.comb(b - a - 1, b)
    return -value if b % 2 else value


def trinom(n: int, j: int) -> int:
    """Coefficient of x^j in (1 + x + 1/x)^n, via the binomial sum."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    return sum(binom(n, k) * binom(n - k, k + j) for k in range(n + 1))


def legendre3(x: int) -> int:
    """The quadratic residue symbol modulo 3: 0, +1, -1 as x is 0, 1, 2 mod 3."""
    r = x % 3
    return 0 if r == 0 else (1 if r == 1 else -1)


def symbol_monomial(s: int, num: int, den: int) -> LaurentPoly:
    """s * q^(num/den) for a symbol s in {-1, 0, +1}.

    A zero symbol suppresses the monomial before the exponent is even
    formed; otherwise num/den must be an exact integer.
    """
    if s not in (-1, 0, 1):
        raise ValueError(f"symbol must be -1, 0 or +1, got {s}")
    if den not in (1, 2, 3, 6):
        raise ValueError(f"unsupported exponent denominator {den}")
    if s == 0:
        return ZERO
    if num % den != 0:
        raise IntegralityError(
            f"non-integral exponent with nonzero symbol: {num}/{den}"
        )
    return monomial(s, num // den)


def r_n(n: int) -> LaurentPoly:
    """The closed three-case monomial form attached to the residue of n mod 3.

    n = 3m   -> (-1)^m (1 + q^m) q^(m(3m-1)/2)
    n = 3m+1 -> (-1)^m q^(m(3m+1)/2)
    n = 3m-1 -> (-1)^m q^(m(3m-1)/2)   with m = (n+1)/3

    >>> print(r_n(3))
    -q - q^2
    """
    if n < 1:
        raise ValueError("index must be positive")
    rem = n % 3
    if rem == 0:
        m = n // 3
        sign = -1 if m % 2 else 1
        e = m * (3 * m - 1) // 2
        return monomial(sign, e) + monomial(sign, e + m)
    if rem == 1:
        m = n // 3
        sign = -1 if m % 2 else 1
        return monomial(sign, m * (3 * m + 1) // 2)
    m = (n + 1) // 3
    sign = -1 if m % 2 else 1
    return monomial(sign, m * (3 * m - 1) // 2)


def clear_caches() -> None:
    _qbinom_memo.clear()
    qpoch.cache_clear()
