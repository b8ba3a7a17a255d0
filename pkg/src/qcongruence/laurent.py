"""Exact Laurent polynomials in q over arbitrary-precision integers.

A value is a dense coefficient run starting at ``min_exp``:
``LaurentPoly((2, 0, -1), -1)`` is ``2*q^-1 - q``.  Values are immutable
and canonical (no leading/trailing zero coefficients, and the zero
polynomial is uniquely ``coeffs=(), min_exp=0``), so structural equality
is mathematical equality and values can be shared freely across threads.
"""
from __future__ import annotations

from typing import Iterable, Iterator

# Products with fewer schoolbook coefficient multiplications than this are
# done by the direct convolution loop; larger ones go through the packed
# big-integer route (see _mul_packed), which is bit-identical.
_PACKED_MUL_CUTOFF = 4096


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    >>> f = LaurentPoly((1, 1))        # 1 + q
    >>> g = LaurentPoly((-1, 1))       # -1 + q
    >>> print(f * g)
    -1 + q^2
    >>> print(LaurentPoly((1, 1), -1)) # q^-1 + 1
    q^-1 + 1
    """

    __slots__ = ("coeffs", "min_exp")

    coeffs: tuple[int, ...]
    min_exp: int

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        cs = list(coeffs)
        start = 0
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        while start < end and cs[start] == 0:
            start += 1
        if start == end:
            object.__setattr__(self, "coeffs", ())
            object.__setattr__(self, "min_exp", 0)
        else:
            object.__setattr__(self, "coeffs", tuple(cs[start:end]))
            object.__setattr__(self, "min_exp", min_exp + start)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,) and self.min_exp == 0

    @property
    def degree(self) -> int:
        """Largest exponent present.  Raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, e: int) -> int:
        """Coefficient of q^e."""
        i = e - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) for the nonzero terms, ascending."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def num_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.min_exp == other.min_exp

    def __hash__(self) -> int:
        return hash((self.min_exp, self.coeffs))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple(-c for c in self.coeffs), self.min_exp)

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        # Copy the longer run in bulk and fold the shorter one in.
        a, b = self, other
        if len(a.coeffs) < len(b.coeffs):
            a, b = b, a
        lo = min(a.min_exp, b.min_exp)
        hi = max(a.min_exp + len(a.coeffs), b.min_exp + len(b.coeffs))
        out = [0] * (hi - lo)
        off = a.min_exp - lo
        out[off : off + len(a.coeffs)] = a.coeffs
        off = b.min_exp - lo
        for i, c in enumerate(b.coeffs, start=off):
            out[i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            if other == 1:
                return self
            return LaurentPoly(tuple(c * other for c in self.coeffs), self.min_exp)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        la, lb = len(self.coeffs), len(other.coeffs)
        if la == 1:
            return other.shift(self.min_exp) * self.coeffs[0]
        if lb == 1:
            return self.shift(other.min_exp) * other.coeffs[0]
        if la * lb <= _PACKED_MUL_CUTOFF:
            out = _mul_schoolbook(self.coeffs, other.coeffs)
        else:
            out = _mul_packed(self.coeffs, other.coeffs)
        return LaurentPoly(out, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # -- structure maps ----------------------------------------------------

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by q^e (exponent translation only)."""
        if not self.coeffs or e == 0:
            return self
        return LaurentPoly(self.coeffs, self.min_exp + e)

    def subs_qpow(self, e: int) -> "LaurentPoly":
        """Substitute q -> q^e for a positive integer e (exponent scaling)."""
        if e <= 0:
            raise ValueError("substitution power must be positive")
        if e == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return LaurentPoly(out, self.min_exp * e)

    def evaluate(self, x: int = 1) -> int:
        """Exact integer value at q = x.

        Negative exponents are only meaningful for x = 1 or x = -1.
        """
        if x == 1:
            return sum(self.coeffs)
        if self.min_exp < 0 and x != -1:
            raise ValueError("cannot evaluate negative exponents at |x| != 1")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_exp:
            if x == -1:
                return acc if self.min_exp % 2 == 0 else -acc
            return acc * x**self.min_exp
        return acc

    # -- division ----------------------------------------------------------

    def divmod_monic(self, g: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Euclidean division by a monic ordinary polynomial.

        Requires ``self.min_exp >= 0`` and ``g`` monic with ``min_exp == 0``
        and degree >= 1.  Returns (quot, rem) with ``self == quot*g + rem``
        and ``deg(rem) < deg(g)``, everything exact over the integers.
        """
        if self.min_exp < 0:
            raise ValueError("dividend has negative exponents")
        if g.is_zero or g.min_exp != 0 or g.coeffs[-1] != 1 or len(g.coeffs) < 2:
            raise ValueError("divisor must be monic with min_exp 0 and degree >= 1")
        d = len(g.coeffs) - 1
        size = self.min_exp + len(self.coeffs)
        if size <= d:
            return ZERO, self
        rem = [0] * self.min_exp + list(self.coeffs)
        quot = [0] * (size - d)
        # Only the nonzero lower terms of g take work per step, so sparse
        # divisors such as q^n - 1 reduce in O(len * terms).
        gterms = [(i, c) for i, c in enumerate(g.coeffs[:-1]) if c]
        for i in range(size - 1, d - 1, -1):
            c = rem[i]
            if c:
                base = i - d
                quot[base] = c
                for off, gc in gterms:
                    rem[base + off] -= c * gc
        return LaurentPoly(quot), LaurentPoly(rem[:d])

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, terms in increasing exponent order.

        >>> LaurentPoly((1, 0, 3), -2).render()
        'q^-2 + 3'
        """
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.render()}')"


ZERO = LaurentPoly()
ONE = LaurentPoly((1,))
Q = LaurentPoly((1,), 1)


def monomial(coeff: int, exp: int = 0) -> LaurentPoly:
    """coeff * q^exp."""
    return LaurentPoly((coeff,), exp)


def _mul_schoolbook(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _mul_packed(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Convolution via packed big-integer multiplication.

    Coefficients are packed into fixed-width byte slots of one huge int per
    operand; the single integer product then holds every convolution
    coefficient, offset by a per-slot bias so negative values never borrow
    across slots.  Exact, hence bit-identical to the schoolbook loop.
    """
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    bits = max_a.bit_length() + max_b.bit_length() + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    packed = _pack(a, width) * _pack(b, width)
    total = len(a) + len(b) - 1
    half = 1 << (8 * width - 1)
    comb = ((1 << (8 * width * total)) - 1) // ((1 << (8 * width)) - 1)
    raw = (packed + comb * half).to_bytes(total * width, "little")
    ibytes = int.from_bytes
    return [
        ibytes(raw[o : o + width], "little") - half
        for o in range(0, total * width, width)
    ]


def _pack(coeffs: tuple[int, ...], width: int) -> int:
    pos = bytearray(len(coeffs) * width)
    neg = None
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * width : i * width + (c.bit_length() + 7) // 8] = c.to_bytes(
                (c.bit_length() + 7) // 8, "little"
            )
        elif c < 0:
            if neg is None:
                neg = bytearray(len(coeffs) * width)
            c = -c
            neg[i * width : i * width + (c.bit_length() + 7) // 8] = c.to_bytes(
                (c.bit_length() + 7) // 8, "little"
            )
    value = int.from_bytes(pos, "little")
    if neg is not None:
        value -= int.from_bytes(neg, "little")
    return value


def multiplicity(f: LaurentPoly, g: LaurentPoly) -> int:
    """Number of times the monic polynomial g exactly divides f (f nonzero).

    Powers of q in f are units for this purpose and are ignored.
    """
    if f.is_zero:
        raise ValueError("multiplicity of the zero polynomial is undefined")
    count = 0
    cur = f.shift(-f.min_exp)
    while True:
        quot, rem = cur.divmod_monic(g)
        if not rem.is_zero:
            return count
        count += 1
        cur = quot
