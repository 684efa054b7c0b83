"""The family pipeline: certificates, bounded-height scans, example checks.

A FamilyCertificate for z^d + psi(c) consists of a passing hypothesis report
on psi and the two smallest good primes p < q, with N = (p^2 - 1)(q^2 - 1):
every rational periodic point of every member then has exact period at most
N. Scans enumerate c of bounded height, compute the complete preperiodic set
of z^d + psi(c) for each, and assert the period bound on every row; a
violation would be an implementation bug and aborts the scan.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .dynamics import MapSpec, affine_fixed_points, enumerate_preperiodic
from .primesearch import find_good_primes, reduced_rationals
from .ratfunc import (
    HypothesisReport,
    RatFuncQ,
    check_hypothesis,
    eval_psi,
    parse_psi,
    report_to_json,
)
from .rational import INF, is_square_rat, rat_to_str


class HypothesisError(ValueError):
    """psi fails the pole-support hypothesis; carries the report."""

    def __init__(self, report: HypothesisReport):
        super().__init__(f"hypothesis fails: {report.failure_reason.value}")
        self.report = report


class InsufficientPrimesError(ValueError):
    """Fewer than two good primes below the bound; raise the bound."""


class PeriodBoundViolation(AssertionError):
    """A scanned orbit exceeded the certified period bound N (a bug signal)."""


@dataclass(frozen=True)
class FamilyCertificate:
    d: int
    psi: RatFuncQ
    hypothesis: HypothesisReport
    p: int
    q: int

    @property
    def N(self) -> int:
        return (self.p ** 2 - 1) * (self.q ** 2 - 1)


def build_certificate(d: int, psi: RatFuncQ, prime_bound: int = 100) -> FamilyCertificate:
    """Hypothesis check plus the two smallest good primes; N = (p^2-1)(q^2-1)."""
    if d < 2:
        raise ValueError("degree must be >= 2")
    report = check_hypothesis(psi)
    if not report.passes:
        raise HypothesisError(report)
    primes = find_good_primes(report.decomposition, count=2, bound=prime_bound)
    if not primes.complete:
        raise InsufficientPrimesError(
            f"found {len(primes.good_primes)} good primes below {prime_bound}; "
            "retry with a larger bound"
        )
    p, q = primes.good_primes[:2]
    return FamilyCertificate(d=d, psi=psi, hypothesis=report, p=p, q=q)


@dataclass(frozen=True)
class ScanRow:
    c: Fraction
    alpha: Fraction
    affine_count: int
    total_count: int
    max_period: int
    max_tail: int
    has_affine_fixed_point: bool


@dataclass
class ScanSummary:
    rows_scanned: int
    empirical_max_total: int
    empirical_max_period: int
    histogram: Dict[int, int] = field(default_factory=dict)


def _compute_row(args: Tuple[int, RatFuncQ, Fraction]) -> ScanRow:
    d, psi, c = args
    alpha = eval_psi(psi, c)
    if alpha is INF:
        raise AssertionError(f"psi has a pole at c={rat_to_str(c)} despite the hypothesis")
    m = MapSpec(d, alpha)
    graph = enumerate_preperiodic(m)
    return ScanRow(
        c=c,
        alpha=alpha,
        affine_count=graph.affine_count,
        total_count=graph.total_count,
        max_period=graph.max_period,
        max_tail=graph.max_tail,
        has_affine_fixed_point=bool(affine_fixed_points(m)),
    )


def scan_family(
    cert: FamilyCertificate, height_bound: int, workers: int = 1
) -> Tuple[List[ScanRow], ScanSummary]:
    """One row per c of height <= height_bound, in canonical order.

    Worker count never changes the output: rows are produced in scan order
    regardless of how the c-batches are distributed.
    """
    if height_bound < 1:
        raise ValueError("height bound must be >= 1")
    cs = reduced_rationals(height_bound)
    tasks = [(cert.d, cert.psi, c) for c in cs]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_compute_row, tasks, chunksize=64))
    else:
        rows = [_compute_row(t) for t in tasks]

    histogram: Dict[int, int] = {}
    max_total = 0
    max_period = 0
    for row in rows:
        if row.max_period > cert.N:
            raise PeriodBoundViolation(
                f"period {row.max_period} > N={cert.N} at c={rat_to_str(row.c)}"
            )
        histogram[row.total_count] = histogram.get(row.total_count, 0) + 1
        max_total = max(max_total, row.total_count)
        max_period = max(max_period, row.max_period)
    summary = ScanSummary(
        rows_scanned=len(rows),
        empirical_max_total=max_total,
        empirical_max_period=max_period,
        histogram=histogram,
    )
    return rows, summary


SCAN_CSV_COLUMNS = (
    "c",
    "alpha",
    "affine_count",
    "total_count",
    "max_period",
    "max_tail",
    "has_affine_fixed_point",
)


def rows_to_csv(rows: List[ScanRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            [
                rat_to_str(r.c),
                rat_to_str(r.alpha),
                r.affine_count,
                r.total_count,
                r.max_period,
                r.max_tail,
                "true" if r.has_affine_fixed_point else "false",
            ]
        )
    return buf.getvalue()


def certificate_to_json(cert: FamilyCertificate) -> dict:
    return {
        "d": cert.d,
        "psi": str(cert.psi),
        "hypothesis": report_to_json(cert.hypothesis),
        "p": cert.p,
        "q": cert.q,
        "N": cert.N,
    }


def summary_to_json(cert: FamilyCertificate, summary: ScanSummary) -> dict:
    return {
        "certificate": certificate_to_json(cert),
        "rows_scanned": summary.rows_scanned,
        "empirical_max_total": summary.empirical_max_total,
        "empirical_max_period": summary.empirical_max_period,
        "histogram": {str(k): v for k, v in sorted(summary.histogram.items())},
    }


# ---------------------------------------------------------------------------
# the paper-level worked example: psi(t) = 2/(t^2 + 8), d = 2
# ---------------------------------------------------------------------------

EXAMPLE_PSI_TEXT = "2/(t^2+8)"


def _square_family_values(count: int) -> List[Fraction]:
    """Distinct c with c^2 + 8 a rational square, from the conic x^2+8=y^2.

    Lines of rational slope through the rational point (1, 3) sweep out all
    rational points: c = 1 + (6m - 2)/(1 - m^2) for slopes m with m^2 != 1.
    """
    values = []
    seen = set()
    k = 0
    while len(values) < count:
        k += 1
        for m in (Fraction(k, k + 1), Fraction(-k, k + 1), Fraction(k + 1, k), Fraction(-(k + 1), k)):
            if m ** 2 == 1:
                continue
            c = 1 + (6 * m - 2) / (1 - m ** 2)
            if c not in seen:
                seen.add(c)
                values.append(c)
        if k > 16 * count:
            break
    return values[:count]


def verify_example(height_bound: int) -> dict:
    """Check the fixed-point criterion for z^2 + 2/(c^2+8) exhaustively.

    For d = 2 an affine rational fixed point exists iff 1 - 4 alpha is a
    rational square; with alpha = 2/(c^2+8) that discriminant is
    c^2/(c^2+8), a square iff c^2+8 is a square or c = 0. The c = 0 member
    (alpha = 1/4, double fixed point 1/2) is the one boundary case where the
    plain biconditional "c^2+8 square <=> fixed point exists" needs the
    exception; it is reported explicitly rather than silently folded in.
    """
    psi = parse_psi(EXAMPLE_PSI_TEXT)
    failures = []
    checked = 0
    zero_case = None
    for c in reduced_rationals(height_bound):
        checked += 1
        alpha = eval_psi(psi, c)
        fixed = affine_fixed_points(MapSpec(2, alpha))
        square = is_square_rat(c ** 2 + 8) is not None
        if c == 0:
            zero_case = {
                "c": "0",
                "square": square,
                "fixed_points": sorted(rat_to_str(z) for z in fixed),
            }
            equivalent = bool(fixed)  # discriminant 0: double root, no square needed
        else:
            equivalent = square == bool(fixed)
        if not equivalent:
            failures.append({"c": rat_to_str(c), "square": square, "fixed_points": len(fixed)})
    family = _square_family_values(height_bound)
    family_failures = [
        rat_to_str(c)
        for c in family
        if not affine_fixed_points(MapSpec(2, eval_psi(psi, c)))
    ]
    return {
        "checked": checked,
        "equivalence_failures": failures,
        "zero_exception": zero_case,
        "square_family_size": len(family),
        "square_family_failures": family_failures,
    }
