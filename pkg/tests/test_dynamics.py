import random
from fractions import Fraction

import pytest

from ubdyn.dynamics import (
    DeskScaleError,
    MapSpec,
    affine_fixed_points,
    apply_map,
    brute_force_preper_oracle,
    candidate_denominator,
    classify_orbit,
    enumerate_preperiodic,
    escape_radius,
    graph_to_json,
)
from ubdyn.rational import INF, rat_height


class TestApplyMap:
    def test_three_cycle_steps(self):
        m = MapSpec(2, Fraction(-29, 16))
        assert apply_map(m, Fraction(-1, 4)) == Fraction(-7, 4)
        assert apply_map(m, Fraction(5, 4)) == Fraction(-1, 4)

    def test_cubic_fixed_point(self):
        assert apply_map(MapSpec(3, Fraction(0)), Fraction(-1)) == Fraction(-1)

    def test_infinity(self):
        assert apply_map(MapSpec(2, Fraction(1)), INF) is INF

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            MapSpec(1, Fraction(1))


class TestEscapeRadius:
    @pytest.mark.parametrize(
        "d,alpha,expected",
        [
            (2, Fraction(-29, 16), Fraction(45, 16)),
            (2, Fraction(0), Fraction(2)),
            (5, Fraction(1, 4), Fraction(2)),
        ],
    )
    def test_formula(self, d, alpha, expected):
        assert escape_radius(MapSpec(d, alpha)) == expected

    def test_growth_guarantee(self):
        # |z| >= R implies |f(z)| >= |z| + 1, exactly, on 1000 samples
        rng = random.Random(1)
        for _ in range(1000):
            d = rng.choice([2, 3, 4])
            alpha = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
            m = MapSpec(d, alpha)
            R = escape_radius(m)
            bump = Fraction(rng.randint(0, 10**6), rng.randint(1, 10**6))
            z = (R + bump) * rng.choice([1, -1])
            assert rat_height(z) >= 1
            assert abs(apply_map(m, z)) >= abs(z) + 1


class TestClassifyOrbit:
    def test_tail_then_cycle(self):
        out = classify_orbit(MapSpec(2, Fraction(-1)), Fraction(1))
        assert (out.kind, out.tail, out.period) == ("preperiodic", 1, 2)

    def test_three_cycle(self):
        out = classify_orbit(MapSpec(2, Fraction(-29, 16)), Fraction(-1, 4))
        assert (out.kind, out.tail, out.period) == ("preperiodic", 0, 3)

    def test_escape(self):
        out = classify_orbit(MapSpec(2, Fraction(1)), Fraction(0))
        assert out.kind == "escaped"
        assert out.step == 2  # 0 -> 1 -> 2 and |2| >= R = 2

    def test_infinity_fixed(self):
        out = classify_orbit(MapSpec(2, Fraction(1)), INF)
        assert (out.tail, out.period) == (0, 1)

    def test_padic_escape_terminates(self):
        # real orbit stays inside the radius; denominators blow up p-adically
        m = MapSpec(2, Fraction(18, 121))
        out = classify_orbit(m, Fraction(3, 11))
        assert out.kind == "escaped"

    def test_period_minimality(self):
        # every reported period n has f^k(z) != z for 1 <= k < n
        for alpha in (Fraction(-29, 16), Fraction(-1), Fraction(-7, 4)):
            m = MapSpec(2, alpha)
            g = enumerate_preperiodic(m)
            for p in g.points:
                if p.z is INF or p.tail != 0:
                    continue
                w = p.z
                for k in range(1, p.period):
                    w = apply_map(m, w)
                    assert w != p.z
                assert apply_map(m, w) == p.z


class TestCandidateDenominator:
    @pytest.mark.parametrize(
        "d,alpha,expected",
        [
            (2, Fraction(-29, 16), 4),
            (2, Fraction(1, 2), None),
            (3, Fraction(5, 8), 2),
            (2, Fraction(7), 1),
        ],
    )
    def test_examples(self, d, alpha, expected):
        assert candidate_denominator(MapSpec(d, alpha)) == expected


GOLD_CASES = [
    # (d, alpha, total, max_period)
    (2, Fraction(-29, 16), 9, 3),
    (2, Fraction(1, 4), 3, 1),
    (2, Fraction(-1), 4, 2),
    (2, Fraction(1, 2), 1, 1),
    (3, Fraction(0), 4, 1),
]


class TestEnumerate:
    @pytest.mark.parametrize("d,alpha,total,max_period", GOLD_CASES)
    def test_gold_cases(self, d, alpha, total, max_period):
        g = enumerate_preperiodic(MapSpec(d, alpha))
        assert g.total_count == total
        assert g.max_period == max_period

    def test_gold_point_sets(self):
        g = enumerate_preperiodic(MapSpec(2, Fraction(-29, 16)))
        expected = {INF} | {Fraction(u, 4) for u in (-7, -5, -3, -1, 1, 3, 5, 7)}
        assert g.point_set() == expected
        g = enumerate_preperiodic(MapSpec(2, Fraction(1, 4)))
        assert g.point_set() == {INF, Fraction(1, 2), Fraction(-1, 2)}

    def test_closure_and_label_consistency(self):
        rng = random.Random(7)
        for _ in range(40):
            d = rng.choice([2, 3])
            m0 = rng.randint(1, 5)
            m = MapSpec(d, Fraction(rng.randint(-40, 40), m0 ** d))
            g = enumerate_preperiodic(m)
            pts = g.point_set()
            labels = {p.z: (p.tail, p.period) for p in g.points}
            for z, fz in g.edges:
                assert fz in pts
                tail, period = labels[z]
                ftail, fperiod = labels[fz]
                if tail > 0:
                    assert ftail == tail - 1
                else:
                    assert ftail == 0 and fperiod == period

    def test_denominator_rigidity(self):
        rng = random.Random(11)
        for b in (1, 4, 9, 16, 27):
            for _ in range(30):
                d = 3 if b == 27 else 2
                alpha = Fraction(rng.randint(-50, 50), b)
                m = MapSpec(d, alpha)
                m0 = candidate_denominator(m)
                g = enumerate_preperiodic(m)
                for p in g.points:
                    if p.z is not INF:
                        assert p.z.denominator == m0

    def test_oracle_equivalence_sample(self):
        rng = random.Random(13)
        for _ in range(25):
            d = rng.choice([2, 3, 4])
            b = rng.choice([1, 2, 4, 8, 9, 16, 27, 25, 50])
            m = MapSpec(d, Fraction(rng.randint(-60, 60), b))
            enumerated = {
                p.z
                for p in enumerate_preperiodic(m).points
                if p.z is not INF and rat_height(p.z) <= 50
            }
            assert enumerated == brute_force_preper_oracle(m, 50)

    def test_desk_scale_cap(self):
        with pytest.raises(DeskScaleError):
            enumerate_preperiodic(MapSpec(2, Fraction(-(10 ** 13), 1)))

    def test_json_schema(self):
        j = graph_to_json(enumerate_preperiodic(MapSpec(2, Fraction(1, 4))))
        assert j["points"][0] == {"z": "inf", "tail": 0, "period": 1}
        assert j["affine_count"] == 2 and j["total_count"] == 3
        assert j["certificates"] == {"denominator": "2", "escape_radius": "2"}


class TestAffineFixedPoints:
    def test_examples(self):
        assert affine_fixed_points(MapSpec(2, Fraction(2, 9))) == {
            Fraction(1, 3),
            Fraction(2, 3),
        }
        assert affine_fixed_points(MapSpec(2, Fraction(1))) == set()
        assert affine_fixed_points(MapSpec(2, Fraction(1, 4))) == {Fraction(1, 2)}

    def test_general_degree(self):
        assert affine_fixed_points(MapSpec(3, Fraction(0))) == {
            Fraction(0),
            Fraction(1),
            Fraction(-1),
        }
        assert affine_fixed_points(MapSpec(3, Fraction(6))) == {Fraction(-2)}

    def test_matches_period_one_points(self):
        rng = random.Random(3)
        for _ in range(30):
            d = rng.choice([2, 3])
            b = rng.choice([1, 4, 9]) if d == 2 else rng.choice([1, 8, 27])
            m = MapSpec(d, Fraction(rng.randint(-30, 30), b))
            from_graph = {
                p.z
                for p in enumerate_preperiodic(m).points
                if p.z is not INF and p.tail == 0 and p.period == 1
            }
            assert affine_fixed_points(m) == from_graph


class TestOracle:
    def test_paper_family_member(self):
        got = brute_force_preper_oracle(MapSpec(2, Fraction(-29, 16)), 50)
        assert got == {Fraction(u, 4) for u in (-7, -5, -3, -1, 1, 3, 5, 7)}

    def test_nonsquare_denominator_empty(self):
        assert brute_force_preper_oracle(MapSpec(2, Fraction(1, 2)), 50) == set()

    def test_pure_power_map(self):
        assert brute_force_preper_oracle(MapSpec(2, Fraction(0)), 10) == {
            Fraction(0),
            Fraction(1),
            Fraction(-1),
        }

    def test_height_cap(self):
        with pytest.raises(ValueError):
            brute_force_preper_oracle(MapSpec(2, Fraction(0)), 101)
