"""Exact rational arithmetic: reduced fractions, heights, valuations, exact roots.

Rationals are stdlib ``fractions.Fraction`` values, which already maintain the
invariants we rely on everywhere: lowest terms, positive denominator, zero as
0/1, unbounded integer precision. This module adds the number-theoretic
helpers the rest of the package needs (naive height, ell-adic valuation,
exact integer d-th roots, rational square roots) plus the "num/den" string
serialization used by the CLI. No floating point is used anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Union


class _Infinity:
    """The point at infinity on the projective line. Singleton."""

    __slots__ = ()

    def __repr__(self):
        return "inf"

    def __str__(self):
        return "inf"


#: The unique point at infinity; compare with ``is`` or ``==`` (identity).
INF = _Infinity()

RatLike = Union[Fraction, int]
ProjPoint = Union[Fraction, _Infinity]


def rat(num: int, den: int = 1) -> Fraction:
    """Reduced rational num/den with positive denominator.

    Raises ZeroDivisionError for den = 0.
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def rat_height(x: RatLike) -> int:
    """Naive (Weil) height max(|num|, den) of a reduced rational."""
    x = Fraction(x)
    return max(abs(x.numerator), x.denominator)


# Deterministic Miller-Rabin witnesses, sufficient for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid far beyond 2^64)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def padic_valuation(x: RatLike, ell: int):
    """ell-adic valuation v_ell(x); +infinity (math.inf) for x = 0.

    ell must be prime; v_ell(num) - v_ell(den) formalizes "ell does not
    divide the denominator" as v_ell >= 0.
    """
    if not is_prime(ell):
        raise ValueError(f"valuation requires a prime, got {ell}")
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    n = abs(x.numerator)
    while n % ell == 0:
        n //= ell
        v += 1
    d = x.denominator
    while d % ell == 0:
        d //= ell
        v -= 1
    return v


def _integer_nth_root(b: int, d: int) -> int:
    """floor(b ** (1/d)) by Newton iteration on integers, b >= 1, d >= 2."""
    if b < 2:
        return b
    if d == 2:
        return math.isqrt(b)
    x = 1 << -(-b.bit_length() // d)  # upper seed: 2^ceil(bits/d) >= root
    while True:
        y = ((d - 1) * x + b // x ** (d - 1)) // d
        if y >= x:
            return x
        x = y


def nth_root_exact(b: int, d: int) -> Optional[int]:
    """Exact integer d-th root: m with m^d = b, or None if b is not a d-th power."""
    if b < 1:
        raise ValueError("nth_root_exact requires b >= 1")
    if d < 2:
        raise ValueError("nth_root_exact requires d >= 2")
    m = _integer_nth_root(b, d)
    return m if m ** d == b else None


def is_square_rat(x: RatLike) -> Optional[Fraction]:
    """Nonnegative square root of x if x is a square in Q, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    rn = math.isqrt(x.numerator)
    if rn * rn != x.numerator:
        return None
    rd = math.isqrt(x.denominator)
    if rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


def rat_to_str(x: ProjPoint) -> str:
    """Serialize as "num/den", omitting "/den" when den = 1; INF as "inf"."""
    if x is INF:
        return "inf"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rat_from_str(s: str) -> Fraction:
    """Inverse of rat_to_str. Rejects floats and malformed input."""
    m = _RAT_RE.match(s.strip())
    if not m:
        raise ValueError(f"not a rational literal: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat(num, den)
