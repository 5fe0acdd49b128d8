"""Counting generalized binary representations and their parity structure.

A digit set is a finite set of non-negative digits containing 0.  Writing
n = sum(eps_i * 2^i) with every eps_i drawn from the set, the number of such
writings f(n) obeys a digit-peeling recursion on the last binary digit.
Modulo 2 the stream f(0), f(1), ... is the coefficient sequence of the
power-series inverse of the set's characteristic polynomial phi, so it is
purely periodic with period the order of phi, odd exactly on the residues
where the cofactor of 1 + x^period has a one.

The digit set {0, 1, 2} reproduces the Stern sequence, shifted by one, and
its diatomic rows are provided for cross-reading.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import F2Poly
from .order_beta import cofactor, order

__all__ = [
    "DigitSet",
    "ParityProfile",
    "phi",
    "count_representations",
    "parity_series",
    "parity_series_via_cofactor",
    "parity_profile",
    "stern",
    "diatomic_row",
]


class DigitSet:
    """Strictly increasing digits starting at 0.

    The 0 digit is required: without it no n > 0 would terminate the
    digit-peeling recursion with finitely many representations.
    """

    __slots__ = ("_digits", "_memo")

    def __init__(self, digits):
        ds = tuple(int(d) for d in digits)
        if len(ds) != len(set(ds)):
            raise ValueError("digits must be distinct")
        if any(d < 0 for d in ds):
            raise ValueError("digits must be non-negative")
        ds = tuple(sorted(ds))
        if not ds or ds[0] != 0:
            raise ValueError("digit set must contain 0")
        self._digits = ds
        self._memo = {0: 1}

    @classmethod
    def parse(cls, text: str) -> "DigitSet":
        s = "".join(text.split())
        if not (s.startswith("{") and s.endswith("}")):
            raise ValueError(f"digit set must look like {{0,1,2}}, got '{text}'")
        body = s[1:-1]
        if not body:
            raise ValueError("digit set must contain 0")
        parts = body.split(",")
        for p in parts:
            if not p.isdigit():
                raise ValueError(f"bad digit '{p}' in digit set '{text}'")
        return cls(int(p) for p in parts)

    @property
    def digits(self) -> tuple[int, ...]:
        return self._digits

    def __str__(self) -> str:
        return "{" + ",".join(str(d) for d in self._digits) + "}"

    def __repr__(self) -> str:
        return f"DigitSet({self})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigitSet):
            return NotImplemented
        return self._digits == other._digits

    def __hash__(self) -> int:
        return hash(self._digits)


@dataclass(frozen=True)
class ParityProfile:
    """Period of the count parity and the residues where counts are odd."""

    period: int
    odd_residues: tuple[int, ...]
    order_exact: bool


def phi(A: DigitSet) -> F2Poly:
    """Characteristic polynomial of the digit set: sum of x^a over its digits."""
    return F2Poly.from_exponents(A.digits)


def count_representations(A: DigitSet, n: int) -> int:
    """Exact number of ways to write n with digits from A in base 2.

    Peels the last binary digit: every representation of n picks some digit
    a = n (mod 2) for position 0 and continues as a representation of
    (n - a)/2.  Counts are memoized on the digit set, so repeated queries
    share work; the memo makes a DigitSet instance single-threaded.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    memo = A._memo
    if n in memo:
        return memo[n]
    digits = A.digits
    stack = [n]
    while stack:
        m = stack[-1]
        if m in memo:
            stack.pop()
            continue
        total = 0
        ready = True
        for a in digits:
            if a > m:
                break
            if (a ^ m) & 1:
                continue
            child = (m - a) >> 1
            v = memo.get(child)
            if v is None:
                stack.append(child)
                ready = False
            else:
                total += v
        if ready:
            memo[m] = total
            stack.pop()
    return memo[n]


def parity_series(A: DigitSet, N: int) -> list[int]:
    """First N count parities, streamed from the linear recurrence.

    Inverting phi as a power series says bit n is the xor of the bits at
    offsets n - a over the nonzero digits a; no counts are materialized.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    taps = [a for a in A.digits if a > 0]
    bits = [0] * N
    if N > 0:
        bits[0] = 1
    for n in range(1, N):
        acc = 0
        for a in taps:
            if a > n:
                break
            acc ^= bits[n - a]
        bits[n] = acc
    return bits


def parity_series_via_cofactor(A: DigitSet, N: int) -> list[int]:
    """The same stream rebuilt by tiling the cofactor bits; cross-check path."""
    if N < 0:
        raise ValueError("N must be non-negative")
    prof = parity_profile(A)
    block = [0] * prof.period
    for e in prof.odd_residues:
        block[e] = 1
    reps = -(-N // prof.period) if N else 0
    return (block * reps)[:N]


def parity_profile(A: DigitSet) -> ParityProfile:
    """Exact parity period of the counts and the odd residues within it."""
    p = phi(A)
    D = order(p)
    fstar = cofactor(p, D)
    return ParityProfile(period=D, odd_residues=tuple(fstar.exponents()), order_exact=True)


def stern(n: int) -> int:
    """Stern sequence: s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1).

    Computed by walking the bits of n below the leading one, carrying the
    pair (s(m), s(m+1)); no recursion, O(log n) additions.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 0
    u, v = 1, 1
    for i in range(n.bit_length() - 2, -1, -1):
        if (n >> i) & 1:
            u = u + v
        else:
            v = u + v
    return u


def diatomic_row(k: int) -> list[int]:
    """Row k of the diatomic array: row 0 is (1, 1) and each next row keeps
    its parent's entries, inserting the sum of every adjacent pair between
    them, for 2^k + 1 entries in row k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > 26:
        raise ValueError("row of length 2^k + 1 would not fit in memory")
    row = [1, 1]
    for _ in range(k):
        nxt = [1]
        for i in range(1, len(row)):
            nxt.append(row[i - 1] + row[i])
            nxt.append(row[i])
        row = nxt
    return row
