"""Command-line interface: one executable, machine-readable subcommands.

Exit codes: 0 success, 1 usage/parse error, 2 hypothesis failure, 3 assertion
or certificate violation. All output on stdout is JSON (or CSV for scans);
errors are rendered as JSON {"error": code, "detail": text} on stderr.
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dynamics, family, primesearch, ratfunc
from .rational import is_prime, rat_from_str

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_VIOLATION = 3


class CliError(Exception):
    def __init__(self, code: int, name: str, detail: str):
        super().__init__(detail)
        self.code = code
        self.name = name


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", message)
        raise SystemExit(EXIT_USAGE)


def _emit_error(name: str, detail: str):
    sys.stderr.write(json.dumps({"error": name, "detail": detail}) + "\n")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _parse_psi_arg(text: str) -> ratfunc.RatFuncQ:
    try:
        return ratfunc.parse_psi(text)
    except (ratfunc.PsiParseError, ZeroDivisionError) as e:
        raise CliError(EXIT_USAGE, "parse", str(e))


def _default_workers() -> int:
    env = os.environ.get("UBDYN_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _good_prime_report_json(report: primesearch.GoodPrimeReport) -> dict:
    dec = report.decomposition
    return {
        "decomposition": {
            "A": str(dec.A),
            "G": [[str(c), xd, yd] for c, xd, yd in dec.G.terms()],
            "H": [[str(c), xd, yd] for c, xd, yd in dec.H.terms()],
            "n": dec.n,
        },
        "good_primes": report.good_primes,
        "scanned_bound": report.scanned_bound,
        "skipped_degenerate": report.skipped_degenerate,
        "eligible": report.eligible_count,
        "empirical_density": (
            f"{report.empirical_density.numerator}/{report.empirical_density.denominator}"
        ),
        "complete": report.complete,
    }


def cmd_analyze_psi(args) -> int:
    psi = _parse_psi_arg(args.psi)
    report = ratfunc.check_hypothesis(psi)
    _emit_json(ratfunc.report_to_json(report))
    return EXIT_OK if report.passes else EXIT_HYPOTHESIS


def cmd_find_primes(args) -> int:
    psi = _parse_psi_arg(args.psi)
    report = ratfunc.check_hypothesis(psi)
    if not report.passes:
        raise CliError(
            EXIT_HYPOTHESIS, "hypothesis", f"psi fails: {report.failure_reason.value}"
        )
    prime_report = primesearch.find_good_primes(
        report.decomposition, count=args.count, bound=args.bound
    )
    _emit_json(_good_prime_report_json(prime_report))
    return EXIT_OK


def cmd_preper(args) -> int:
    try:
        alpha = rat_from_str(args.alpha)
    except ValueError as e:
        raise CliError(EXIT_USAGE, "parse", str(e))
    try:
        graph = dynamics.enumerate_preperiodic(dynamics.MapSpec(args.d, alpha))
    except dynamics.DeskScaleError as e:
        raise CliError(EXIT_USAGE, "desk_scale", str(e))
    except dynamics.BudgetExceededError as e:
        raise CliError(EXIT_VIOLATION, "budget", str(e))
    _emit_json(dynamics.graph_to_json(graph))
    return EXIT_OK


def cmd_scan_family(args) -> int:
    psi = _parse_psi_arg(args.psi)
    try:
        cert = family.build_certificate(args.d, psi, prime_bound=args.prime_bound)
    except family.HypothesisError as e:
        raise CliError(
            EXIT_HYPOTHESIS, "hypothesis", f"psi fails: {e.report.failure_reason.value}"
        )
    except family.InsufficientPrimesError as e:
        raise CliError(EXIT_USAGE, "primes", str(e))
    try:
        rows, summary = family.scan_family(cert, args.height, workers=args.workers)
    except family.PeriodBoundViolation as e:
        raise CliError(EXIT_VIOLATION, "period_bound", str(e))
    if args.out == "csv":
        sys.stdout.write(family.rows_to_csv(rows))
        sys.stderr.write(json.dumps(family.summary_to_json(cert, summary)) + "\n")
    else:
        from .rational import rat_to_str

        payload = family.summary_to_json(cert, summary)
        payload["rows"] = [
            {
                "c": rat_to_str(r.c),
                "alpha": rat_to_str(r.alpha),
                "affine_count": r.affine_count,
                "total_count": r.total_count,
                "max_period": r.max_period,
                "max_tail": r.max_tail,
                "has_affine_fixed_point": r.has_affine_fixed_point,
            }
            for r in rows
        ]
        _emit_json(payload)
    return EXIT_OK


def cmd_verify_lemma1(args) -> int:
    psi = _parse_psi_arg(args.psi)
    report = ratfunc.check_hypothesis(psi)
    if not report.passes:
        raise CliError(
            EXIT_HYPOTHESIS, "hypothesis", f"psi fails: {report.failure_reason.value}"
        )
    if not is_prime(args.ell):
        raise CliError(EXIT_USAGE, "usage", f"--ell must be prime, got {args.ell}")
    record = primesearch.verify_lemma1(psi, report.decomposition, args.ell, args.height)
    _emit_json(
        {
            "ell": record.ell,
            "height_bound": record.height_bound,
            "checked": record.checked,
            "violations": len(record.violations),
            "witnesses": record.violations[:10],
        }
    )
    return EXIT_OK if record.ok else EXIT_VIOLATION


def cmd_verify_example(args) -> int:
    record = family.verify_example(args.height)
    _emit_json(record)
    ok = not record["equivalence_failures"] and not record["square_family_failures"]
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> _Parser:
    parser = _Parser(prog="ubdyn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-psi", help="pole decomposition and hypothesis check")
    p.add_argument("--psi", required=True)
    p.set_defaults(func=cmd_analyze_psi)

    p = sub.add_parser("find-primes", help="search for good primes")
    p.add_argument("--psi", required=True)
    p.add_argument("--count", type=int, default=2)
    p.add_argument("--bound", type=int, default=100)
    p.set_defaults(func=cmd_find_primes)

    p = sub.add_parser("preper", help="enumerate the rational preperiodic set")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_preper)

    p = sub.add_parser("scan-family", help="bounded-height family scan")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--prime-bound", type=int, default=100)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=cmd_scan_family)

    p = sub.add_parser("verify-lemma1", help="exhaustive denominator check at one prime")
    p.add_argument("--psi", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=cmd_verify_lemma1)

    p = sub.add_parser("verify-example", help="fixed-point criterion for 2/(t^2+8)")
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=cmd_verify_example)

    return parser


def _join_dashed_values(argv):
    """Rewrite ["--alpha", "-29/16"] as ["--alpha=-29/16"] for argparse."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in ("--alpha", "--psi") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_dashed_values(list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except CliError as e:
        _emit_error(e.name, str(e))
        return e.code


if __name__ == "__main__":
    sys.exit(main())
