"""Good-prime search: primes ell where H mod ell has no linear factor.

A prime ell is "good" for a pole decomposition (A, G, H, n) when ell does not
divide A and H mod ell has no projective root over F_ell. For every such ell
and every rational c = b/a in lowest terms, ell does not divide H(a, b) and
hence does not divide the denominator of psi(c): z^d + psi(c) has good
reduction at ell, uniformly in c. This module finds good primes, measures
their empirical density among eligible primes, and verifies the denominator
consequence exhaustively on bounded-height c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import List, Optional

from . import ffpoly
from .ratfunc import PoleDecomposition, RatFuncQ, eval_psi
from .rational import INF, padic_valuation, rat_to_str


def primes_up_to(bound: int) -> List[int]:
    """All primes <= bound by a simple sieve (desk-scale bounds <= 10^7)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    p = 2
    while p * p <= bound:
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
        p += 1
    return [i for i, v in enumerate(sieve) if v]


@dataclass
class GoodPrimeReport:
    decomposition: PoleDecomposition
    scanned_bound: int
    good_primes: List[int]
    skipped_degenerate: List[int]
    eligible_count: int
    complete: bool

    @property
    def empirical_density(self) -> Fraction:
        if self.eligible_count == 0:
            return Fraction(0)
        return Fraction(len(self.good_primes), self.eligible_count)


def is_good_prime(dec: PoleDecomposition, ell: int) -> bool:
    """ell good: ell does not divide A and H mod ell has no projective root."""
    if dec.A % ell == 0:
        return False
    return not ffpoly.projective_root_exists(dec.H, ell)


def find_good_primes(dec: PoleDecomposition, count: int, bound: int) -> GoodPrimeReport:
    """The first `count` good primes below `bound`, in increasing order.

    Primes dividing A are skipped as degenerate (mirroring "take any ell in L
    with ell not dividing A") and excluded from the density denominator. The
    report is flagged incomplete when fewer than `count` good primes exist
    below the bound.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    good: List[int] = []
    skipped: List[int] = []
    eligible = 0
    scanned = 0
    for ell in primes_up_to(bound):
        if len(good) >= count:
            break
        scanned = ell
        if dec.A % ell == 0:
            skipped.append(ell)
            continue
        eligible += 1
        if not ffpoly.projective_root_exists(dec.H, ell):
            good.append(ell)
    return GoodPrimeReport(
        decomposition=dec,
        scanned_bound=scanned,
        good_primes=good,
        skipped_degenerate=skipped,
        eligible_count=eligible,
        complete=len(good) >= count,
    )


def empirical_density(dec: PoleDecomposition, bound: int) -> Fraction:
    """Fraction of eligible primes <= bound that are good."""
    good = 0
    eligible = 0
    for ell in primes_up_to(bound):
        if dec.A % ell == 0:
            continue
        eligible += 1
        if not ffpoly.projective_root_exists(dec.H, ell):
            good += 1
    if eligible == 0:
        return Fraction(0)
    return Fraction(good, eligible)


@dataclass
class Lemma1Record:
    ell: int
    height_bound: int
    checked: int
    violations: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def reduced_rationals(height_bound: int):
    """All c = b/a in lowest terms with max(|b|, a) <= bound.

    Canonical scan order: by height, then numerator, then denominator.
    """
    out = [Fraction(0)]
    for h in range(1, height_bound + 1):
        batch = []
        # numerator at the height: b = +-h, denominator a <= h
        for a in range(1, h + 1):
            if gcd(h, a) == 1:
                batch.append(Fraction(-h, a))
                batch.append(Fraction(h, a))
        # denominator at the height: a = h, |b| < h
        for b in range(1, h):
            if gcd(b, h) == 1:
                batch.append(Fraction(-b, h))
                batch.append(Fraction(b, h))
        batch.sort(key=lambda x: (x.numerator, x.denominator))
        out.extend(batch)
    return out


def verify_lemma1(
    psi: RatFuncQ, dec: PoleDecomposition, ell: int, height_bound: int
) -> Lemma1Record:
    """Exhaustively check the Lemma 1 chain for one prime.

    For every c = b/a in lowest terms of height <= height_bound, assert that
    ell does not divide H(a, b) and that v_ell(psi(c)) >= 0. For a good prime
    both hold; for a bad prime the violations are reported with witnesses.
    """
    record = Lemma1Record(ell=ell, height_bound=height_bound, checked=0)
    for c in reduced_rationals(height_bound):
        record.checked += 1
        a, b = c.denominator, c.numerator
        h_ab = dec.H.eval(a, b)
        value = eval_psi(psi, c)
        v = None if value is INF else padic_valuation(value, ell)
        if h_ab % ell == 0 or (v is not None and v < 0):
            record.violations.append(
                {
                    "c": rat_to_str(c),
                    "H(a,b)": str(h_ab),
                    "valuation": None if v is None else int(v) if v != float("inf") else "inf",
                }
            )
    return record
