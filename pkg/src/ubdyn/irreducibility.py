"""Irreducibility over Q for primitive integer polynomials, with certificates.

Decision procedure, cheapest test first:

1. rational root test (complete for degrees 2 and 3);
2. scan primes ell <= 200 with squarefree, degree-preserving reduction for a
   single-prime irreducibility certificate;
3. degree-set sieve: intersect the feasible factor-degree subset sums across
   those reductions; an empty proper intersection certifies irreducibility;
4. Kronecker-style exhaustive factor search through interpolation of divisor
   tuples, pruned by a Landau-Mignotte coefficient bound. Degree cap 16.

Every positive answer carries a certificate dict, every negative answer an
explicit nontrivial factorization. Above the degree cap we refuse to guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Tuple

from . import ffpoly, polyz
from .polyz import Poly


class IrreducibilityUndecided(Exception):
    """Raised when the input exceeds the configured desk-scale degree cap."""


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    certificate: Optional[dict]  # present iff irreducible
    factors: Optional[Tuple[Poly, Poly]]  # present iff reducible

    def __bool__(self):
        return self.irreducible


def _divisors(n: int):
    """All positive divisors of |n|, n != 0."""
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root_factor(h: Poly):
    """A linear factor (q*t - p) from a rational root p/q, or None."""
    a0, an = h[0], polyz.lc(h)
    if a0 == 0:
        return (0, 1)  # root t = 0
    for p in _divisors(a0):
        for q in _divisors(an):
            if math.gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                if polyz.eval_at(h, Fraction(sp, q)) == 0:
                    return (sp, q)
    return None


def _factor_degree_multiset(hbar: ffpoly.FpPoly):
    """Multiset of irreducible factor degrees of a squarefree hbar (DDF)."""
    ell = hbar.ell
    f = ffpoly.monic_fp(hbar)
    degrees = []
    x = ffpoly.mod_fp(ffpoly.fp_poly(ell, (0, 1)), f)
    t = ffpoly.fp_poly(ell, (0, 1))
    i = 1
    while f.deg >= 2 * i:
        x = ffpoly.powmod_fp(x, ell, f)
        g = ffpoly.gcd_fp(ffpoly.sub_fp(x, ffpoly.mod_fp(t, f)), f)
        if g.deg > 0:
            degrees.extend([i] * (g.deg // i))
            f = _div_exact_fp(f, g)
            x = ffpoly.mod_fp(x, f)
        i += 1
    if f.deg > 0:
        degrees.append(f.deg)
    return degrees


def _div_exact_fp(a: ffpoly.FpPoly, b: ffpoly.FpPoly) -> ffpoly.FpPoly:
    ell = a.ell
    r = list(a.coeffs)
    q = [0] * (len(r) - len(b.coeffs) + 1)
    inv = pow(b.coeffs[-1], ell - 2, ell)
    db = b.deg
    while len(r) - 1 >= db:
        if r[-1]:
            f = r[-1] * inv % ell
            k = len(r) - 1 - db
            q[k] = f
            for i, c in enumerate(b.coeffs):
                r[k + i] = (r[k + i] - f * c) % ell
        r.pop()
    if any(r):
        raise ArithmeticError("inexact division in F_ell[T]")
    return ffpoly.fp_poly(ell, q)


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _small_primes(bound: int):
    sieve = bytearray([1]) * (bound + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [i for i, v in enumerate(sieve) if v]


def _kronecker_search(h: Poly, feasible):
    """Search for an integer factor of degree k in `feasible` (k <= deg/2).

    For a factor g, g(x) divides h(x) at every integer x; interpolate g from
    signed-divisor tuples at k+1 points and trial-divide. Candidates whose
    coefficients exceed the Landau-Mignotte bound are pruned.
    """
    n = polyz.degree(h)
    norm2 = math.isqrt(sum(c * c for c in h)) + 1
    # evaluation points with small |h(x)|, avoiding zeros of h
    pool = []
    for x in range(-24, 25):
        v = polyz.eval_at(h, x)
        if v != 0:
            pool.append((len(_divisors(v)), abs(x), x, v))
    pool.sort()
    for k in sorted(feasible):
        if k < 2 or k > n // 2:
            continue
        bound = (1 << k) * norm2  # Mignotte: |g_i| <= 2^k * ||h||_2 * |lc g / lc h|
        pts = pool[: k + 1]
        if len(pts) < k + 1:
            raise IrreducibilityUndecided("not enough evaluation points")
        xs = [p[2] for p in pts]
        divisor_lists = []
        for idx, (_, _, x, v) in enumerate(pts):
            # |g(x)| <= (k+1) * bound * max(1,|x|)^k
            cap = (k + 1) * bound * max(1, abs(x)) ** k
            ds = [d for d in _divisors(v) if d <= cap]
            if idx == 0:
                divisor_lists.append(ds)  # fix the sign of g via the first value
            else:
                divisor_lists.append([s * d for d in ds for s in (1, -1)])
        for combo in product(*divisor_lists):
            g = polyz.interpolate(list(zip(xs, combo)))
            if polyz.degree(g) != k:
                continue
            if any(Fraction(c).denominator != 1 for c in g):
                continue
            gz = polyz.poly([int(c) for c in g])
            if polyz.lc(h) % polyz.lc(gz) != 0:
                continue
            if any(abs(c) > bound for c in gz):
                continue
            quot, rem = polyz.divmod_q(h, gz)
            if rem:
                continue
            cof = polyz.poly([int(c) for c in quot]) if all(
                Fraction(c).denominator == 1 for c in quot
            ) else None
            if cof is None:
                continue
            return gz, cof
    return None


def irreducible_over_q(h: Poly, degree_cap: int = 16) -> IrreducibilityResult:
    """Decide irreducibility of a primitive nonconstant h in Q[t] (= over Z, Gauss)."""
    h, _ = polyz.primitive(h)
    n = polyz.degree(h)
    if n < 1:
        raise ValueError("irreducibility is for nonconstant polynomials")
    if n == 1:
        return IrreducibilityResult(True, {"method": "linear"}, None)
    if n > degree_cap:
        raise IrreducibilityUndecided(
            f"degree {n} exceeds the desk-scale cap {degree_cap}; undecided"
        )

    root = _rational_root_factor(h)
    if root is not None:
        p, q = root
        lin = polyz.poly((-p, q))
        cof_q, rem = polyz.divmod_q(h, lin)
        assert not rem
        # h and lin are primitive, so the cofactor is integral (Gauss)
        cof = polyz.poly([int(c) for c in cof_q])
        return IrreducibilityResult(False, None, (lin, cof))
    if n <= 3:
        return IrreducibilityResult(
            True, {"method": "rational_root_test", "degree": n}, None
        )

    degree_sets = []
    sieve_primes = []
    for ell in _small_primes(200):
        if polyz.lc(h) % ell == 0:
            continue
        hbar = ffpoly.reduce_mod(h, ell)
        if hbar.deg != n:
            continue
        if ffpoly.gcd_fp(hbar, ffpoly.reduce_mod(polyz.derivative(h), ell)).deg != 0:
            continue  # not squarefree mod ell
        if ffpoly.irreducible_mod(hbar):
            return IrreducibilityResult(True, {"method": "mod_prime", "ell": ell}, None)
        degree_sets.append(_subset_sums(_factor_degree_multiset(hbar)))
        sieve_primes.append(ell)
        if len(sieve_primes) >= 12:
            break

    if degree_sets:
        feasible = set.intersection(*degree_sets) - {0, n}
        if not feasible:
            return IrreducibilityResult(
                True, {"method": "degree_sieve", "primes": sieve_primes}, None
            )
    else:
        feasible = set(range(1, n))
    # linear factors already excluded by the rational root test
    feasible = {k for k in feasible if 2 <= min(k, n - k)}
    search_degrees = sorted({min(k, n - k) for k in feasible})

    found = _kronecker_search(h, search_degrees)
    if found is not None:
        return IrreducibilityResult(False, None, found)
    return IrreducibilityResult(
        True,
        {"method": "factor_search", "degrees_tried": search_degrees},
        None,
    )
