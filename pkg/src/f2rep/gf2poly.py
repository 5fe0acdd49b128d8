"""Bit-packed arithmetic for polynomials over GF(2).

A polynomial is stored as a non-negative Python int with bit i holding the
coefficient of x^i, so the zero polynomial is 0 and x^3 + x + 1 is 0b1011.
Addition is xor, and Python's arbitrary-precision ints supply word-parallel
xor, shifts, and popcount for free.  F2Poly values are immutable and hashable.

Three text forms interchange with the packed form: an expression such as
``x^9 + x^7 + x + 1`` (descending exponents), the hex of the coefficient
bits (``0x283``), and an enumeration index (``@643``) whose binary digits
are the coefficients.  All three round-trip through :func:`parse_poly`.
"""

from __future__ import annotations

import os
from collections.abc import Iterable

__all__ = [
    "F2Poly",
    "BitCapExceeded",
    "bit_cap",
    "ensure_bits",
    "from_index",
    "parse_poly",
    "mul",
    "divrem",
    "modpow_x",
    "reciprocal",
    "ell1",
    "ell0",
]

_DEFAULT_BIT_CAP = 1 << 28


class BitCapExceeded(RuntimeError):
    """An operation would materialize more coefficient bits than the cap allows."""


def bit_cap() -> int:
    """Active coefficient budget in bits; F2REP_BIT_CAP overrides the default 2**28."""
    raw = os.environ.get("F2REP_BIT_CAP")
    return _DEFAULT_BIT_CAP if raw is None else int(raw)


def ensure_bits(nbits: int) -> None:
    """Fail fast if a result of about nbits coefficients would exceed the cap."""
    cap = bit_cap()
    if nbits > cap:
        raise BitCapExceeded(
            f"operation needs about {nbits} coefficient bits but the cap is {cap}"
            " (set F2REP_BIT_CAP to raise it)"
        )


def _mul_int(a: int, b: int) -> int:
    """Carry-less product: shift-xor schoolbook over the sparser operand."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b << (low.bit_length() - 1)
        a ^= low
    return acc


# A nibble spread to even bit positions; squaring doubles every exponent.
_SPREAD4 = (0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85)
_SPREAD_LO = bytes(_SPREAD4[v & 0xF] for v in range(256))
_SPREAD_HI = bytes(_SPREAD4[v >> 4] for v in range(256))


def _square_int(a: int) -> int:
    if a == 0:
        return 0
    n = (a.bit_length() + 7) // 8
    data = a.to_bytes(n, "little")
    out = bytearray(2 * n)
    out[0::2] = data.translate(_SPREAD_LO)
    out[1::2] = data.translate(_SPREAD_HI)
    return int.from_bytes(out, "little")


# Below this quotient length the plain bit-at-a-time division wins; above it
# the table-driven byte-at-a-time division keeps long divisions linear.
_TABLE_QLEN_MIN = 512


def _divrem_school(a: int, b: int) -> tuple[int, int]:
    db = b.bit_length() - 1
    q = 0
    i = a.bit_length() - 1 - db
    shifted = b << i
    while i >= 0:
        if (a >> (db + i)) & 1:
            a ^= shifted
            q |= 1 << i
        shifted >>= 1
        i -= 1
    return q, a


def _chunk_tables(b: int) -> tuple[list[int], list[int]]:
    """Remainder and quotient of h * x^deg(b) by b for every byte h."""
    d = b.bit_length() - 1
    t, q = b ^ (1 << d), 1
    ts, qs = [t], [q]
    for _ in range(7):
        t <<= 1
        q <<= 1
        if (t >> d) & 1:
            t ^= b
            q |= 1
        ts.append(t)
        qs.append(q)
    T = [0] * 256
    Q = [0] * 256
    for h in range(1, 256):
        i = (h & -h).bit_length() - 1
        rest = h & (h - 1)
        T[h] = T[rest] ^ ts[i]
        Q[h] = Q[rest] ^ qs[i]
    return T, Q


def _divrem_table(a: int, b: int, want_q: bool) -> tuple[int, int]:
    d = b.bit_length() - 1
    mask = (1 << d) - 1
    T, Q = _chunk_tables(b)
    n = (a.bit_length() + 7) // 8
    data = a.to_bytes(n, "big")
    r = 0
    if not want_q:
        for byte in data:
            r = ((r << 8) | byte)
            h = r >> d
            r = (r & mask) ^ T[h]
        return 0, r
    qbytes = bytearray(n)
    j = 0
    for byte in data:
        r = ((r << 8) | byte)
        h = r >> d
        r = (r & mask) ^ T[h]
        qbytes[j] = Q[h]
        j += 1
    return int.from_bytes(qbytes, "big"), r


def _divrem_int(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if b == 1:
        return a, 0
    da = a.bit_length() - 1
    db = b.bit_length() - 1
    if da < db:
        return 0, a
    if da - db < _TABLE_QLEN_MIN:
        return _divrem_school(a, b)
    return _divrem_table(a, b, True)


def _mod_int(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if b == 1:
        return 0
    da = a.bit_length() - 1
    db = b.bit_length() - 1
    if da < db:
        return a
    if da - db < _TABLE_QLEN_MIN:
        i = da - db
        shifted = b << i
        while i >= 0:
            if (a >> (db + i)) & 1:
                a ^= shifted
            shifted >>= 1
            i -= 1
        return a
    return _divrem_table(a, b, False)[1]


def _modpow_x_int(e: int, m: int) -> int:
    """x^e reduced mod m, by square and multiply over the bits of e."""
    dm = m.bit_length() - 1
    top = 1 << dm
    r = 1
    for i in range(e.bit_length() - 1, -1, -1):
        r = _mod_int(_square_int(r), m)
        if (e >> i) & 1:
            r <<= 1
            if r & top:
                r ^= m
    return r


def _reciprocal_int(a: int) -> int:
    return int(format(a, "b")[::-1], 2)


def _text_from_int(bits: int) -> str:
    if bits == 0:
        return "0"
    parts = []
    v = bits
    while v:
        e = v.bit_length() - 1
        v ^= 1 << e
        parts.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
    return " + ".join(parts)


def _int_from_text(text: str) -> int:
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return 0
    bits = 0
    for term in s.split("+"):
        if term == "1":
            e = 0
        elif term == "x":
            e = 1
        elif term.startswith("x^"):
            exp = term[2:]
            if not exp.isdigit():
                raise ValueError(f"bad exponent in term '{term}'")
            e = int(exp)
        else:
            raise ValueError(f"bad polynomial term '{term}'")
        t = 1 << e
        if bits & t:
            raise ValueError(f"repeated term '{term}'")
        bits |= t
    return bits


class F2Poly:
    """A polynomial over GF(2), held as the int of its coefficient bits.

    ``+``, ``-`` and ``^`` all mean coefficient-wise addition, ``*`` is the
    carry-less product, and ``divmod`` / ``//`` / ``%`` perform Euclidean
    division.  ``p << k`` multiplies by x^k.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0):
        if not isinstance(bits, int) or isinstance(bits, bool) or bits < 0:
            raise ValueError("coefficient bits must be a non-negative integer")
        self._bits = bits

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "F2Poly":
        """Build from exponents, xor-accumulated: a repeated exponent cancels mod 2."""
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError("exponents must be non-negative")
            bits ^= 1 << e
        return cls(bits)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def index(self) -> int:
        """Position in the enumeration of all polynomials: just the bits."""
        return self._bits

    @property
    def degree(self) -> int | None:
        """Highest exponent present, or None for the zero polynomial."""
        return self._bits.bit_length() - 1 if self._bits else None

    def coefficient(self, i: int) -> int:
        if i < 0:
            raise ValueError("exponent must be non-negative")
        return (self._bits >> i) & 1

    def exponents(self) -> list[int]:
        """Exponents with coefficient 1, ascending."""
        out = []
        v = self._bits
        while v:
            low = v & -v
            out.append(low.bit_length() - 1)
            v ^= low
        return out

    def substitute_x2(self) -> "F2Poly":
        """p(x^2), which over GF(2) equals p*p."""
        return F2Poly(_square_int(self._bits))

    def to_text(self) -> str:
        return _text_from_int(self._bits)

    def to_hex(self) -> str:
        return hex(self._bits)

    def __add__(self, other: "F2Poly") -> "F2Poly":
        if not isinstance(other, F2Poly):
            return NotImplemented
        return F2Poly(self._bits ^ other._bits)

    __sub__ = __add__
    __xor__ = __add__

    def __mul__(self, other: "F2Poly") -> "F2Poly":
        if not isinstance(other, F2Poly):
            return NotImplemented
        return F2Poly(_mul_int(self._bits, other._bits))

    def __lshift__(self, k: int) -> "F2Poly":
        if k < 0:
            raise ValueError("shift must be non-negative")
        return F2Poly(self._bits << k)

    def __divmod__(self, other: "F2Poly") -> tuple["F2Poly", "F2Poly"]:
        if not isinstance(other, F2Poly):
            return NotImplemented
        q, r = _divrem_int(self._bits, other._bits)
        return F2Poly(q), F2Poly(r)

    def __floordiv__(self, other: "F2Poly") -> "F2Poly":
        if not isinstance(other, F2Poly):
            return NotImplemented
        return F2Poly(_divrem_int(self._bits, other._bits)[0])

    def __mod__(self, other: "F2Poly") -> "F2Poly":
        if not isinstance(other, F2Poly):
            return NotImplemented
        return F2Poly(_mod_int(self._bits, other._bits))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Poly):
            return NotImplemented
        return self._bits == other._bits

    def __hash__(self) -> int:
        return hash((F2Poly, self._bits))

    def __bool__(self) -> bool:
        return self._bits != 0

    def __str__(self) -> str:
        return _text_from_int(self._bits)

    def __repr__(self) -> str:
        if self._bits.bit_count() <= 16:
            return f"F2Poly('{_text_from_int(self._bits)}')"
        return f"F2Poly(degree={self.degree}, terms={self._bits.bit_count()})"


def from_index(n: int) -> F2Poly:
    """The n-th polynomial: binary digits of n are the coefficients (bit i -> x^i)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return F2Poly(n)


def parse_poly(text: str) -> F2Poly:
    """Accept expression (``x^3 + x + 1``), hex (``0xb``) or index (``@11``) form."""
    s = text.strip()
    if s.startswith("@"):
        body = s[1:]
        if not body.isdigit():
            raise ValueError(f"bad polynomial index '{s}'")
        return F2Poly(int(body))
    if s[:2].lower() == "0x":
        try:
            return F2Poly(int(s, 16))
        except ValueError:
            raise ValueError(f"bad hex coefficient string '{s}'") from None
    return F2Poly(_int_from_text(s))


def mul(a: F2Poly, b: F2Poly) -> F2Poly:
    """Carry-less product of two polynomials."""
    return F2Poly(_mul_int(a.bits, b.bits))


def divrem(a: F2Poly, b: F2Poly) -> tuple[F2Poly, F2Poly]:
    """Euclidean division: a = q*b + r with deg r < deg b."""
    q, r = _divrem_int(a.bits, b.bits)
    return F2Poly(q), F2Poly(r)


def modpow_x(exponent: int, modulus: F2Poly) -> F2Poly:
    """x**exponent reduced mod the modulus, in O(log exponent) squarings.

    The modulus must have constant term 1 (so x is invertible) and degree
    at least 1.
    """
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    m = modulus.bits
    if not m & 1:
        raise ValueError("modulus constant term is 0, so x is not invertible")
    if m == 1:
        raise ValueError("modulus must have degree >= 1")
    return F2Poly(_modpow_x_int(exponent, m))


def reciprocal(f: F2Poly) -> F2Poly:
    """Coefficients reversed: x^deg(f) * f(1/x)."""
    if not f.bits:
        raise ValueError("reciprocal of the zero polynomial is undefined")
    return F2Poly(_reciprocal_int(f.bits))


def ell1(f: F2Poly) -> int:
    """Number of nonzero coefficients."""
    return f.bits.bit_count()


def ell0(f: F2Poly, N: int) -> int:
    """Number of zero coefficients among positions 0..N; N must reach deg f."""
    d = f.bits.bit_length() - 1
    if N < 0 or N < d:
        raise ValueError(f"window end {N} is below the degree {d}")
    return (N + 1) - f.bits.bit_count()
