"""Rational functions psi in Q(t): parsing, normal form, pole decomposition.

A RatFuncQ stores psi = P/Q with integer polynomials, coprime over Q, with
gcd(content P, content Q) = 1 and lc(Q) > 0; this normal form is unique. The
pole decomposition writes psi(y/x) = G(x,y) / (A * H(x,y)^n) with H primitive,
irreducible, positive leading y-coefficient and deg G = n deg H. The
hypothesis checker accepts psi exactly when that normal form exists with
deg H >= 2: the pole support is a single irreducible point of the projective
line with at least two geometric points.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from . import polyz
from .irreducibility import irreducible_over_q
from .polyz import HomogPoly, Poly
from .rational import INF, _Infinity


class PsiParseError(ValueError):
    """Syntax or semantic error in a psi expression; carries the position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class RatFuncQ:
    """psi = num/den in the unique integer normal form described above."""

    num: Poly
    den: Poly

    def degree_pair(self) -> Tuple[int, int]:
        return polyz.degree(self.num), polyz.degree(self.den)

    def __str__(self):
        num_s = polyz.poly_to_str(self.num)
        if self.den == polyz.ONE:
            return num_s
        return f"({num_s})/({polyz.poly_to_str(self.den)})"


class FailureReason(enum.Enum):
    REDUCIBLE_SUPPORT = "ReducibleSupport"
    SINGLE_POINT_SUPPORT = "SinglePointSupport"
    POLE_AT_INFINITY_MIXED = "PoleAtInfinityMixed"
    DEGREE_ONE = "DegreeOne"
    NOT_A_RATIONAL_FUNCTION = "NotARationalFunction"


@dataclass(frozen=True)
class PoleDecomposition:
    """psi(y/x) = G / (A * H^n); H primitive irreducible, deg G = n deg H."""

    A: int
    G: HomogPoly
    H: HomogPoly
    n: int


class DecompositionError(ValueError):
    def __init__(self, reason: FailureReason, detail: str = ""):
        super().__init__(f"{reason.value}{': ' + detail if detail else ''}")
        self.reason = reason


@dataclass(frozen=True)
class HypothesisReport:
    passes: bool
    failure_reason: Optional[FailureReason]
    decomposition: Optional[PoleDecomposition]


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([t+\-*/^()])|(\S))")

# parse-time value: (num, den) pair of Fraction-coefficient polynomials
_RF = Tuple[Poly, Poly]


def _rf_normalize_lazy(p: _RF) -> _RF:
    return p


def _rf_add(a: _RF, b: _RF) -> _RF:
    return polyz.add(polyz.mul(a[0], b[1]), polyz.mul(b[0], a[1])), polyz.mul(a[1], b[1])


def _rf_sub(a: _RF, b: _RF) -> _RF:
    return polyz.sub(polyz.mul(a[0], b[1]), polyz.mul(b[0], a[1])), polyz.mul(a[1], b[1])


def _rf_mul(a: _RF, b: _RF) -> _RF:
    return polyz.mul(a[0], b[0]), polyz.mul(a[1], b[1])


def _rf_neg(a: _RF) -> _RF:
    return polyz.neg(a[0]), a[1]


class _Parser:
    """Recursive descent over: expr := term (+|- term)*; term := unary (*|/ unary)*;
    unary := - unary | power; power := atom [^ INT]; atom := INT | t | ( expr )."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        for m in _TOKEN_RE.finditer(text):
            if m.group(3):
                raise PsiParseError(f"unexpected character {m.group(3)!r}", m.start(3))
            if m.group(1):
                self.tokens.append(("int", int(m.group(1)), m.start(1)))
            else:
                self.tokens.append((m.group(2), None, m.start(2)))
            pos = m.end()
        self.tokens.append(("end", None, len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise PsiParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        return tok

    def parse(self) -> _RF:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PsiParseError(f"unexpected token {tok[0]!r}", tok[2])
        return value

    def expr(self) -> _RF:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            value = _rf_add(value, rhs) if op == "+" else _rf_sub(value, rhs)
        return value

    def term(self) -> _RF:
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.next()
            rhs = self.unary()
            if op == "*":
                value = _rf_mul(value, rhs)
            else:
                if not rhs[0]:
                    raise PsiParseError("division by the zero polynomial", pos)
                value = (polyz.mul(value[0], rhs[1]), polyz.mul(value[1], rhs[0]))
        return value

    def unary(self) -> _RF:
        if self.peek()[0] == "-":
            self.next()
            return _rf_neg(self.unary())
        return self.power()

    def power(self) -> _RF:
        base = self.atom()
        if self.peek()[0] == "^":
            _, _, pos = self.next()
            tok = self.next()
            if tok[0] != "int":
                raise PsiParseError("exponent must be a nonnegative integer literal", tok[2])
            e = tok[1]
            return polyz.pow_poly(base[0], e), polyz.pow_poly(base[1], e)
        return base

    def atom(self) -> _RF:
        tok = self.next()
        if tok[0] == "int":
            return (tok[1],) if tok[1] else polyz.ZERO, polyz.ONE
        if tok[0] == "t":
            return polyz.T, polyz.ONE
        if tok[0] == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise PsiParseError(f"unexpected token {tok[0]!r}", tok[2])


def normalize(num: Poly, den: Poly) -> RatFuncQ:
    """Normal form of num/den (integer or Fraction coefficients)."""
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    # clear any Fraction denominators jointly
    denlcm = 1
    for c in list(num) + list(den):
        cd = Fraction(c).denominator
        denlcm = denlcm * cd // math.gcd(denlcm, cd)
    num = polyz.poly([int(Fraction(c) * denlcm) for c in num])
    den = polyz.poly([int(Fraction(c) * denlcm) for c in den])
    if not num:
        return RatFuncQ(polyz.ZERO, polyz.ONE)
    g = polyz.gcd_q(num, den)
    if polyz.degree(g) > 0:
        num = polyz.poly([int(c) for c in polyz.div_exact(num, g)])
        den = polyz.poly([int(c) for c in polyz.div_exact(den, g)])
    cn = polyz.content(num)
    cd = polyz.content(den)
    g = math.gcd(cn, cd) if cn else cd
    if g > 1:
        num = tuple(c // g for c in num)
        den = tuple(c // g for c in den)
    if polyz.lc(den) < 0:
        num = polyz.neg(num)
        den = polyz.neg(den)
    return RatFuncQ(num, den)


def parse_psi(text: str) -> RatFuncQ:
    """Parse a psi expression into normal form."""
    num, den = _Parser(text).parse()
    if not den:
        raise PsiParseError("expression reduces to division by zero", 0)
    return normalize(num, den)


def format_psi(f: RatFuncQ) -> str:
    """Textual form that parse_psi maps back to f (round-trip identity)."""
    return str(f)


def eval_psi(f: RatFuncQ, c) -> Union[Fraction, _Infinity]:
    """Exact value psi(c); INF at a pole. 0/0 is impossible by coprimality."""
    c = Fraction(c)
    den = polyz.eval_at(f.den, c)
    if den == 0:
        return INF
    return Fraction(polyz.eval_at(f.num, c)) / den


# ---------------------------------------------------------------------------
# pole decomposition and the hypothesis
# ---------------------------------------------------------------------------


def homog_decompose(f: RatFuncQ) -> PoleDecomposition:
    """The normal form psi(y/x) = G / (A * H^n), or DecompositionError.

    Failure reasons: the pole divisor is empty (constant psi), is supported at
    a single geometric point (linear H, or a pole only at infinity), mixes the
    point at infinity with affine poles, or has several distinct irreducible
    components.
    """
    dp, dq = f.degree_pair()
    if dq == 0 and dp <= 0:
        raise DecompositionError(
            FailureReason.NOT_A_RATIONAL_FUNCTION, "constant psi has no pole divisor"
        )
    if dp > dq:
        if dq >= 1:
            raise DecompositionError(
                FailureReason.POLE_AT_INFINITY_MIXED,
                "pole at infinity together with affine poles",
            )
        raise DecompositionError(
            FailureReason.SINGLE_POINT_SUPPORT, "pole only at the point at infinity"
        )

    den_prim, den_content = polyz.primitive(f.den)  # lc(den) > 0, so content > 0
    parts = polyz.squarefree_decomposition(den_prim)
    if len(parts) != 1:
        raise DecompositionError(
            FailureReason.REDUCIBLE_SUPPORT, "denominator has several squarefree parts"
        )
    h, n = parts[0]
    irr = irreducible_over_q(h)
    if not irr.irreducible:
        raise DecompositionError(
            FailureReason.REDUCIBLE_SUPPORT,
            "radical of the denominator factors over Q",
        )
    if polyz.degree(h) == 1:
        raise DecompositionError(
            FailureReason.SINGLE_POINT_SUPPORT, "pole support is a single rational point"
        )
    deg_h = polyz.degree(h)
    H = HomogPoly.homogenize(h, deg_h)
    G = HomogPoly.homogenize(f.num, n * deg_h)
    A = den_content
    # reconstruction check: A * h^n must equal the original denominator
    assert polyz.scale(polyz.pow_poly(h, n), A) == f.den
    assert G.deg == n * H.deg
    return PoleDecomposition(A=A, G=G, H=H, n=n)


def check_hypothesis(f: RatFuncQ) -> HypothesisReport:
    """Pass iff the pole decomposition exists (then deg H >= 2 automatically)."""
    try:
        dec = homog_decompose(f)
    except DecompositionError as e:
        return HypothesisReport(False, e.reason, None)
    return HypothesisReport(True, None, dec)


def report_to_json(report: HypothesisReport) -> dict:
    """External JSON schema for analyze-psi; big integers as decimal strings."""
    dec = report.decomposition
    return {
        "A": str(dec.A) if dec else None,
        "G": [[str(c), xd, yd] for c, xd, yd in dec.G.terms()] if dec else None,
        "H": [[str(c), xd, yd] for c, xd, yd in dec.H.terms()] if dec else None,
        "n": dec.n if dec else None,
        "passes": report.passes,
        "failure_reason": report.failure_reason.value if report.failure_reason else None,
    }
