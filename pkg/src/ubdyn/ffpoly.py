"""Univariate polynomial algebra over prime fields F_ell.

Supplies exactly what the good-prime search needs: coefficientwise reduction,
monic gcd, Frobenius powering T^ell mod h by square-and-multiply, existence of
projective roots of a homogeneous form over P^1(F_ell), and a Rabin-style
irreducibility test. No full factorization machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

from .polyz import HomogPoly
from .rational import is_prime as _is_prime_uncached

is_prime = lru_cache(maxsize=65536)(_is_prime_uncached)


@dataclass(frozen=True)
class FpPoly:
    """Dense polynomial over F_ell; coefficients reduced, trailing zeros trimmed."""

    ell: int
    coeffs: Tuple[int, ...]

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return f"0 (mod {self.ell})"
        terms = " + ".join(
            f"{c}" if i == 0 else (f"{c}*T" if i == 1 else f"{c}*T^{i}")
            for i, c in enumerate(self.coeffs) if c
        )
        return f"{terms} (mod {self.ell})"


def fp_poly(ell: int, coeffs: Sequence[int]) -> FpPoly:
    """Build an FpPoly, reducing coefficients mod ell and trimming."""
    if not is_prime(ell):
        raise ValueError(f"modulus must be prime, got {ell}")
    cs = [c % ell for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return FpPoly(ell, tuple(cs))


def reduce_mod(p: Sequence[int], ell: int) -> FpPoly:
    """Coefficientwise reduction of an integer polynomial (or dehomogenized form)."""
    return fp_poly(ell, tuple(p))


def _check_same_modulus(a: FpPoly, b: FpPoly):
    if a.ell != b.ell:
        raise ValueError(f"modulus mismatch: {a.ell} vs {b.ell}")


def add_fp(a: FpPoly, b: FpPoly) -> FpPoly:
    _check_same_modulus(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return fp_poly(a.ell, [x + y for x, y in zip(ca, cb)])


def sub_fp(a: FpPoly, b: FpPoly) -> FpPoly:
    _check_same_modulus(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return fp_poly(a.ell, [x - y for x, y in zip(ca, cb)])


def mul_fp(a: FpPoly, b: FpPoly) -> FpPoly:
    _check_same_modulus(a, b)
    if a.is_zero() or b.is_zero():
        return fp_poly(a.ell, ())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return fp_poly(a.ell, out)


def mod_fp(a: FpPoly, m: FpPoly) -> FpPoly:
    """Remainder of a modulo m."""
    _check_same_modulus(a, m)
    if m.is_zero():
        raise ZeroDivisionError("reduction modulo zero polynomial")
    ell = a.ell
    r = list(a.coeffs)
    dm = m.deg
    inv_lc = pow(m.coeffs[-1], ell - 2, ell)
    while len(r) - 1 >= dm:
        if r[-1]:
            f = r[-1] * inv_lc % ell
            k = len(r) - 1 - dm
            for i, c in enumerate(m.coeffs):
                r[k + i] = (r[k + i] - f * c) % ell
        r.pop()
    return fp_poly(ell, r)


def monic_fp(a: FpPoly) -> FpPoly:
    if a.is_zero():
        return a
    inv = pow(a.coeffs[-1], a.ell - 2, a.ell)
    return fp_poly(a.ell, [c * inv for c in a.coeffs])


def gcd_fp(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd in F_ell[T]."""
    _check_same_modulus(a, b)
    while not b.is_zero():
        a, b = b, mod_fp(a, b)
    return monic_fp(a)


def powmod_fp(base: FpPoly, e: int, m: FpPoly) -> FpPoly:
    """base^e mod m by square-and-multiply."""
    result = fp_poly(m.ell, (1,))
    base = mod_fp(base, m)
    while e:
        if e & 1:
            result = mod_fp(mul_fp(result, base), m)
        base = mod_fp(mul_fp(base, base), m)
        e >>= 1
    return result


def frobenius_powmod(ell: int, h: FpPoly) -> FpPoly:
    """T^ell reduced mod h."""
    if h.deg < 1:
        raise ValueError("frobenius_powmod requires deg h >= 1")
    return powmod_fp(fp_poly(ell, (0, 1)), ell, h)


def projective_root_exists(H: HomogPoly, ell: int) -> bool:
    """Whether the form H has a root in P^1(F_ell).

    Affine roots [1:t] are detected via deg gcd(T^ell - T, h) >= 1 with
    h = H(1, T) mod ell; the point [0:1] is checked directly via H(0, 1).
    A linear factor of H mod ell exists iff one of these holds.
    """
    h = reduce_mod(H.dehomogenize(), ell)
    if h.is_zero():
        raise ValueError(f"form vanishes identically mod {ell} (degenerate reduction)")
    # root at infinity: coefficient of y^deg is H(0,1)
    lead = H.coeffs[H.deg] if len(H.coeffs) > H.deg else 0
    if lead % ell == 0:
        return True
    if h.deg == 0:
        return False
    frob = frobenius_powmod(ell, h)
    diff = sub_fp(frob, mod_fp(fp_poly(ell, (0, 1)), h))
    return gcd_fp(diff, h).deg >= 1


def irreducible_mod(h: FpPoly) -> bool:
    """Rabin irreducibility test in F_ell[T].

    h (degree m) is irreducible iff T^(ell^m) = T mod h and, for every prime
    r | m, gcd(T^(ell^(m/r)) - T, h) = 1.
    """
    m = h.deg
    if m < 1:
        raise ValueError("irreducibility is for nonconstant polynomials")
    if m == 1:
        return True
    ell = h.ell
    t = fp_poly(ell, (0, 1))

    def frob_iterate(k: int) -> FpPoly:
        # T^(ell^k) mod h by k successive ell-th powers
        x = mod_fp(t, h)
        for _ in range(k):
            x = powmod_fp(x, ell, h)
        return x

    prime_divs = []
    mm = m
    d = 2
    while d * d <= mm:
        if mm % d == 0:
            prime_divs.append(d)
            while mm % d == 0:
                mm //= d
        d += 1
    if mm > 1:
        prime_divs.append(mm)

    for r in prime_divs:
        g = gcd_fp(sub_fp(frob_iterate(m // r), mod_fp(t, h)), h)
        if g.deg >= 1:
            return False
    return sub_fp(frob_iterate(m), mod_fp(t, h)).is_zero()
