"""Dense univariate polynomials over Z and Q, and homogeneous binary forms.

A polynomial is a tuple of coefficients indexed by degree with trailing zeros
trimmed; () is the zero polynomial. Integer polynomials use int coefficients;
the same routines accept Fraction coefficients for work over Q (gcd, exact
division, squarefree decomposition, interpolation). Results over Q are
converted back to primitive integer polynomials where the callers need them.

A homogeneous form F(x, y) of degree m is stored as the coefficient list of
its dehomogenization F(1, T): coeffs[j] is the coefficient of y^j x^(m-j).
Homogenizing a univariate q(t) of degree m under t = y/x is therefore the
identity on coefficient lists, with the form degree carried separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Sequence, Tuple

Poly = Tuple  # coefficient tuple, index = degree

ZERO: Poly = ()
ONE: Poly = (1,)
T: Poly = (0, 1)  # the variable itself


def poly(coeffs: Sequence) -> Poly:
    """Trim trailing zeros and return the canonical tuple form."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(p) - 1


def lc(p: Poly):
    """Leading coefficient; 0 for the zero polynomial."""
    return p[-1] if p else 0


def add(a: Poly, b: Poly) -> Poly:
    return poly([x + y for x, y in zip_longest(a, b, fillvalue=0)])


def sub(a: Poly, b: Poly) -> Poly:
    return poly([x - y for x, y in zip_longest(a, b, fillvalue=0)])


def neg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly(out)


def scale(a: Poly, k) -> Poly:
    if k == 0:
        return ZERO
    return poly([x * k for x in a])


def pow_poly(a: Poly, e: int) -> Poly:
    result = ONE
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def eval_at(p: Poly, x):
    """Horner evaluation; exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return poly([i * c for i, c in enumerate(p)][1:])


def divmod_q(a: Poly, b: Poly):
    """Quotient and remainder in Q[t]; coefficients become Fractions."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = [Fraction(c) for c in a]
    db = degree(b)
    blc = Fraction(lc(b))
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        f = r[-1] / blc
        q[k] = f
        for i, c in enumerate(b):
            r[k + i] -= f * c
        r.pop()
    return poly(q), poly(r)


def div_exact(a: Poly, b: Poly) -> Poly:
    """Exact division in Q[t]; raises if b does not divide a."""
    q, r = divmod_q(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def content(p: Poly) -> int:
    """Positive gcd of integer coefficients; 0 for the zero polynomial."""
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def primitive(p: Poly) -> Tuple[Poly, int]:
    """(primitive part with positive leading coefficient, signed content).

    p == scale(primitive_part, signed_content).
    """
    if not p:
        return ZERO, 0
    c = content(p)
    if lc(p) < 0:
        c = -c
    return tuple(x // c for x in p), c


def to_int_poly(p: Poly) -> Poly:
    """Clear denominators of a Fraction polynomial: primitive, positive lc."""
    if not p:
        return ZERO
    denlcm = 1
    for c in p:
        denlcm = denlcm * Fraction(c).denominator // math.gcd(denlcm, Fraction(c).denominator)
    ints = [int(Fraction(c) * denlcm) for c in p]
    prim, _ = primitive(poly(ints))
    return prim


def gcd_q(a: Poly, b: Poly) -> Poly:
    """gcd in Q[t], returned as a primitive integer polynomial, positive lc."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    a, b = poly(a), poly(b)
    while b:
        _, r = divmod_q(a, b)
        a, b = b, r
    if not a:
        return ZERO
    return to_int_poly(a)


def squarefree_decomposition(p: Poly):
    """Yun's algorithm over Q: list of (factor, multiplicity), factors primitive.

    p must be nonconstant; the product of factor^multiplicity equals the
    primitive part of p.
    """
    p, _ = primitive(p)
    out = []
    dp = derivative(p)
    a = gcd_q(p, dp)
    b = div_exact(p, a)
    c = div_exact(dp, a)
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        ai = gcd_q(b, d)
        b = div_exact(b, ai)
        c = div_exact(d, ai)
        d = sub(c, derivative(b))
        if degree(ai) > 0:
            out.append((to_int_poly(ai), i))
        i += 1
    return out


def interpolate(points):
    """Lagrange interpolation through (x, y) pairs; Fraction coefficients."""
    result: Poly = ZERO
    for i, (xi, yi) in enumerate(points):
        basis: Poly = (Fraction(1),)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            basis = mul(basis, (Fraction(-xj), Fraction(1)))
            denom *= Fraction(xi - xj)
        result = add(result, scale(basis, Fraction(yi) / denom))
    return poly(result)


def poly_to_str(p: Poly, var: str = "t") -> str:
    """Human-readable form, highest degree first, e.g. "t^2 + 8"."""
    if not p:
        return "0"
    parts = []
    for i in range(degree(p), -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        elif i == 1:
            term = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            term = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


@dataclass(frozen=True)
class HomogPoly:
    """Homogeneous integer form F(x, y); coeffs[j] multiplies y^j x^(deg-j)."""

    coeffs: Tuple[int, ...]
    deg: int

    def __post_init__(self):
        if len(self.coeffs) > self.deg + 1:
            raise ValueError("coefficient list longer than degree allows")

    @staticmethod
    def homogenize(p: Poly, deg: int) -> "HomogPoly":
        """x^(deg - deg p) * p(y/x) * x^(deg p); requires deg >= deg p."""
        if degree(p) > deg:
            raise ValueError("target degree below polynomial degree")
        return HomogPoly(tuple(p), deg)

    def dehomogenize(self) -> Poly:
        """F(1, T) as a univariate polynomial in T."""
        return poly(self.coeffs)

    def eval(self, x, y):
        """Exact evaluation at integer or rational (x, y)."""
        acc = 0
        for j, c in enumerate(self.coeffs):
            if c:
                acc += c * y ** j * x ** (self.deg - j)
        return acc

    def terms(self):
        """Nonzero monomials as (coeff, xdeg, ydeg), ordered by ydeg."""
        return [(c, self.deg - j, j) for j, c in enumerate(self.coeffs) if c]

    def __str__(self):
        bits = []
        for c, xd, yd in self.terms():
            mono = "*".join(
                s for s in (
                    str(c) if abs(c) != 1 or (xd == 0 and yd == 0) else ("-" if c == -1 else ""),
                    f"x^{xd}" if xd > 1 else ("x" if xd == 1 else ""),
                    f"y^{yd}" if yd > 1 else ("y" if yd == 1 else ""),
                )
                if s not in ("", "-")
            )
            if c == -1 and (xd or yd):
                mono = "-" + mono
            bits.append(mono)
        return " + ".join(bits) if bits else "0"
