"""Exact dynamics of f(z) = z^d + alpha on P^1(Q).

Orbit classification is exact: a full-history hash map yields the minimal
(tail, period) of preperiodic orbits, and the escape radius R = 1 + max(1,
|alpha|) certifies divergence (|z| >= R forces |f(z)| >= |z| + 1, because
|z^d + alpha| >= |z|^2 - |alpha| and |z|(|z|-1) >= R(R-1) >= |alpha| + 1).

Complete enumeration rests on the denominator lemma: write alpha = a/b in
lowest terms. If b is not a perfect d-th power, the only rational preperiodic
point is infinity. Otherwise every affine rational preperiodic point has
denominator exactly m0 = b^(1/d). (At a prime p with v_p(alpha) < 0, an orbit
can only avoid p-adic blowup if v_p(z) = v_p(alpha)/d at every orbit point,
so d | v_p(alpha); at primes p with v_p(alpha) >= 0, any v_p(z) < 0 strictly
decreases under f.) The candidate set {u/m0 : gcd(u, m0) = 1, |u| <= R*m0}
together with the escape radius is therefore provably exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Set, Tuple, Union

from .rational import INF, _Infinity, nth_root_exact, rat_height, rat_to_str

Point = Union[Fraction, _Infinity]

DEFAULT_BUDGET = 512
DESK_SCALE_CAP = 10 ** 6
ORACLE_BIT_CUTOFF = 256


class DeskScaleError(ValueError):
    """Candidate set too large to enumerate at desk scale."""


class BudgetExceededError(RuntimeError):
    """An orbit inside the certified candidate set failed to resolve; a bug signal."""


@dataclass(frozen=True)
class MapSpec:
    """The map z -> z^d + alpha."""

    d: int
    alpha: Fraction

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("degree must be >= 2")
        object.__setattr__(self, "alpha", Fraction(self.alpha))

    def __str__(self):
        return f"z^{self.d} + ({rat_to_str(self.alpha)})"


@dataclass(frozen=True)
class OrbitOutcome:
    kind: str  # "preperiodic" | "escaped" | "budget_exceeded"
    tail: Optional[int] = None
    period: Optional[int] = None
    step: Optional[int] = None

    @property
    def preperiodic(self) -> bool:
        return self.kind == "preperiodic"


def apply_map(m: MapSpec, z: Point) -> Point:
    if z is INF:
        return INF
    return z ** m.d + m.alpha


def escape_radius(m: MapSpec) -> Fraction:
    """R = 1 + max(1, |alpha|); |z| >= R implies |f(z)| >= |z| + 1."""
    return 1 + max(Fraction(1), abs(m.alpha))


def classify_orbit(m: MapSpec, z: Point, budget: int = DEFAULT_BUDGET) -> OrbitOutcome:
    """Exact minimal (tail, period) via full-history hashing, or escape.

    Two sound escape criteria: |iterate| >= R certifies real divergence, and
    an iterate whose denominator differs from m0 certifies p-adic divergence
    (denominator lemma). The second is essential: for alpha in (0, 1/4] real
    orbits can stay inside the escape radius forever while denominators
    square at every step, so the archimedean test alone would neither
    terminate nor stay within feasible integer sizes.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if z is INF:
        return OrbitOutcome("preperiodic", tail=0, period=1)
    radius = escape_radius(m)
    m0 = candidate_denominator(m)
    seen: Dict[Fraction, int] = {}
    current = z
    for step in range(budget):
        if abs(current) >= radius:
            return OrbitOutcome("escaped", step=step)
        if m0 is None or current.denominator != m0:
            return OrbitOutcome("escaped", step=step)
        if current in seen:
            first = seen[current]
            return OrbitOutcome("preperiodic", tail=first, period=step - first)
        seen[current] = step
        current = apply_map(m, current)
    return OrbitOutcome("budget_exceeded", step=budget)


def candidate_denominator(m: MapSpec) -> Optional[int]:
    """m0 = b^(1/d) for alpha = a/b reduced, when b is a perfect d-th power.

    None means the preperiodic set is {infinity} (denominator lemma).
    """
    b = m.alpha.denominator
    if b == 1:
        return 1
    return nth_root_exact(b, m.d)


@dataclass
class PreperPoint:
    z: Point
    tail: int
    period: int


@dataclass
class PreperGraph:
    """The complete rational preperiodic set of z^d + alpha, with structure."""

    map: MapSpec
    points: List[PreperPoint]
    edges: List[Tuple[Point, Point]]
    denominator: Optional[int]
    radius: Fraction

    @property
    def affine_count(self) -> int:
        return sum(1 for p in self.points if p.z is not INF)

    @property
    def total_count(self) -> int:
        return len(self.points)

    @property
    def max_period(self) -> int:
        return max(p.period for p in self.points)

    @property
    def max_tail(self) -> int:
        return max(p.tail for p in self.points)

    def point_set(self) -> Set[Point]:
        return {p.z for p in self.points}


def enumerate_preperiodic(
    m: MapSpec, budget: int = DEFAULT_BUDGET, u_cap: int = DESK_SCALE_CAP
) -> PreperGraph:
    """Certified-complete enumeration of the rational preperiodic set."""
    radius = escape_radius(m)
    points: List[PreperPoint] = []
    m0 = candidate_denominator(m)
    if m0 is not None:
        bound_frac = radius * m0
        u_max = bound_frac.numerator // bound_frac.denominator
        if u_max > u_cap:
            raise DeskScaleError(
                f"candidate numerators up to {u_max} exceed the cap {u_cap}; "
                "too large for desk scale"
            )
        for u in range(-u_max, u_max + 1):
            if gcd(u, m0) != 1:
                continue
            z = Fraction(u, m0)
            outcome = classify_orbit(m, z, budget=budget)
            if outcome.kind == "budget_exceeded":
                raise BudgetExceededError(
                    f"orbit of {rat_to_str(z)} under {m} exceeded budget {budget}"
                )
            if outcome.preperiodic:
                points.append(PreperPoint(z, outcome.tail, outcome.period))
    points.sort(key=lambda p: p.z)
    points = [PreperPoint(INF, 0, 1)] + points  # infinity first, affine ascending
    edges = [(p.z, apply_map(m, p.z)) for p in points]
    return PreperGraph(map=m, points=points, edges=edges, denominator=m0, radius=radius)


def affine_fixed_points(m: MapSpec) -> Set[Fraction]:
    """All rational roots of z^d - z + alpha = 0.

    For d = 2 the discriminant 1 - 4 alpha decides exactly; for general d the
    certified candidate set is searched (a rational fixed point is
    preperiodic, hence lies in it).
    """
    if m.d == 2:
        from .rational import is_square_rat

        disc = 1 - 4 * m.alpha
        root = is_square_rat(disc)
        if root is None:
            return set()
        return {(1 + root) / 2, (1 - root) / 2}
    m0 = candidate_denominator(m)
    if m0 is None:
        return set()
    radius = escape_radius(m)
    bound_frac = radius * m0
    u_max = bound_frac.numerator // bound_frac.denominator
    return {
        z
        for u in range(-u_max, u_max + 1)
        if gcd(u, m0) == 1
        for z in [Fraction(u, m0)]
        if z ** m.d - z + m.alpha == 0
    }


def brute_force_preper_oracle(m: MapSpec, height_bound: int) -> Set[Fraction]:
    """Independent oracle: raw iteration with a bit-size blowup cutoff.

    Classifies every z of height <= height_bound by iterating until a repeat
    (preperiodic) or until numerator/denominator exceed 256 bits (not). Uses
    neither the denominator lemma nor the escape radius.
    """
    if height_bound > 100:
        raise ValueError("oracle is desk-scale only (height <= 100)")
    found: Set[Fraction] = set()
    for den in range(1, height_bound + 1):
        for num in range(-height_bound, height_bound + 1):
            if gcd(num, den) != 1:
                continue
            z = Fraction(num, den)
            seen = {z}
            current = z
            while True:
                current = current ** m.d + m.alpha
                if (
                    current.numerator.bit_length() > ORACLE_BIT_CUTOFF
                    or current.denominator.bit_length() > ORACLE_BIT_CUTOFF
                ):
                    break
                if current in seen:
                    found.add(z)
                    break
                seen.add(current)
    return found


def graph_to_json(g: PreperGraph) -> dict:
    """External JSON schema for the preper CLI subcommand."""
    return {
        "map": {"d": g.map.d, "alpha": rat_to_str(g.map.alpha)},
        "points": [
            {"z": rat_to_str(p.z), "tail": p.tail, "period": p.period} for p in g.points
        ],
        "edges": [[rat_to_str(a), rat_to_str(b)] for a, b in g.edges],
        "affine_count": g.affine_count,
        "total_count": g.total_count,
        "max_period": g.max_period,
        "certificates": {
            "denominator": str(g.denominator) if g.denominator is not None else "none",
            "escape_radius": rat_to_str(g.radius),
        },
    }
