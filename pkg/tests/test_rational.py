import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ubdyn.rational import (
    INF,
    is_prime,
    is_square_rat,
    nth_root_exact,
    padic_valuation,
    rat,
    rat_from_str,
    rat_height,
    rat_to_str,
)


class TestRatReduce:
    def test_sign_normalization(self):
        assert rat(6, -4) == Fraction(-3, 2)

    def test_zero(self):
        z = rat(0, 7)
        assert z.numerator == 0 and z.denominator == 1

    def test_already_reduced(self):
        x = rat(-29, 16)
        assert (x.numerator, x.denominator) == (-29, 16)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            rat(1, 0)

    @given(
        st.integers(-10**6, 10**6),
        st.integers(-10**6, 10**6).filter(lambda v: v != 0),
        st.integers(-1000, 1000).filter(lambda k: k != 0),
    )
    def test_scale_invariance(self, u, v, k):
        assert rat(u, v) == rat(k * u, k * v)


class TestHeight:
    @pytest.mark.parametrize(
        "num,den,expected", [(-29, 16, 29), (0, 1, 1), (2, 9, 9), (7, 7, 1)]
    )
    def test_examples(self, num, den, expected):
        assert rat_height(rat(num, den)) == expected


class TestPadicValuation:
    def test_integer(self):
        assert padic_valuation(16, 2) == 4

    def test_negative(self):
        assert padic_valuation(Fraction(2, 9), 3) == -2

    def test_zero_is_infinite(self):
        assert padic_valuation(0, 5) == math.inf

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            padic_valuation(Fraction(1, 2), 6)

    @given(
        st.fractions(max_denominator=10**4).filter(lambda x: x != 0),
        st.sampled_from([2, 3, 5, 7, 11, 97]),
    )
    def test_unit_decomposition(self, x, ell):
        # x = ell^v * (unit at ell): clearing the ell-part leaves valuation 0
        v = padic_valuation(x, ell)
        unit = x / Fraction(ell) ** v
        assert padic_valuation(unit, ell) == 0


class TestNthRoot:
    @pytest.mark.parametrize("b,d,expected", [(16, 2, 4), (16, 4, 2), (12, 2, None)])
    def test_examples(self, b, d, expected):
        assert nth_root_exact(b, d) == expected

    def test_big(self):
        m = 3 ** 171
        assert nth_root_exact(m ** 3, 3) == m

    @given(st.integers(1, 10**9), st.integers(2, 7))
    def test_against_binary_search(self, b, d):
        lo, hi = 1, b
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** d < b:
                lo = mid + 1
            else:
                hi = mid
        expected = lo if lo ** d == b else None
        assert nth_root_exact(b, d) == expected


class TestSquareRat:
    def test_fraction(self):
        assert is_square_rat(Fraction(1, 9)) == Fraction(1, 3)

    def test_integer(self):
        assert is_square_rat(9) == 3

    def test_nonsquare(self):
        assert is_square_rat(2) is None

    def test_negative(self):
        assert is_square_rat(-4) is None

    def test_zero(self):
        assert is_square_rat(0) == 0


class TestSerialization:
    @pytest.mark.parametrize("s", ["-29/16", "3", "0", "2/9", "-1"])
    def test_round_trip(self, s):
        assert rat_to_str(rat_from_str(s)) == s

    def test_infinity(self):
        assert rat_to_str(INF) == "inf"

    @pytest.mark.parametrize("s", ["1.5", "1/0", "", "a/b", "1/-2"])
    def test_rejects(self, s):
        with pytest.raises((ValueError, ZeroDivisionError)):
            rat_from_str(s)

    @given(st.fractions(max_denominator=10**9))
    def test_round_trip_property(self, x):
        assert rat_from_str(rat_to_str(x)) == x


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    assert {n for n in range(2, 50) if is_prime(n)} == primes
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)
