from fractions import Fraction

import pytest

from ubdyn import polyz
from ubdyn.polyz import HomogPoly, poly


def test_trim_and_degree():
    assert poly([1, 2, 0, 0]) == (1, 2)
    assert poly([0, 0]) == ()
    assert polyz.degree(()) == -1
    assert polyz.degree((5,)) == 0


def test_arithmetic():
    a = poly([1, 1])  # 1 + t
    b = poly([-1, 1])  # -1 + t
    assert polyz.mul(a, b) == (-1, 0, 1)
    assert polyz.add(a, b) == (0, 2)
    assert polyz.sub(a, a) == ()
    assert polyz.pow_poly(a, 3) == (1, 3, 3, 1)


def test_divmod_q():
    q, r = polyz.divmod_q((-1, 0, 0, 1), (-1, 1))  # t^3-1 by t-1
    assert r == ()
    assert q == (1, 1, 1)
    q, r = polyz.divmod_q((1, 0, 1), (0, 1))
    assert q == (0, 1) and r == (1,)


def test_gcd_q():
    a = polyz.mul((1, 1), (2, 0, 1))
    b = polyz.mul((1, 1), (3, 1))
    assert polyz.gcd_q(a, b) == (1, 1)
    assert polyz.gcd_q((2, 0, 1), (1, 1)) == (1,)


def test_content_primitive():
    prim, c = polyz.primitive((6, -12, 18))
    assert prim == (1, -2, 3) and c == 6
    prim, c = polyz.primitive((-6, -12, -18))
    assert prim == (1, 2, 3) and c == -6


def test_squarefree_decomposition():
    # (t+1)^2 (t^2+2)
    p = polyz.mul(polyz.pow_poly((1, 1), 2), (2, 0, 1))
    parts = polyz.squarefree_decomposition(p)
    assert sorted(parts, key=lambda x: x[1]) == [((2, 0, 1), 1), ((1, 1), 2)]
    # pure power
    assert polyz.squarefree_decomposition(polyz.pow_poly((8, 0, 1), 3)) == [((8, 0, 1), 3)]


def test_interpolate():
    # through (0,1), (1,2), (2,5): 1 + t^2
    g = polyz.interpolate([(0, 1), (1, 2), (2, 5)])
    assert g == (Fraction(1), Fraction(0), Fraction(1))


def test_eval_and_derivative():
    p = (8, 0, 1)
    assert polyz.eval_at(p, Fraction(1, 2)) == Fraction(33, 4)
    assert polyz.derivative(p) == (0, 2)


def test_homog_eval_matches_substitution():
    H = HomogPoly.homogenize((8, 0, 1), 2)  # y^2 + 8x^2
    assert H.eval(1, 1) == 9
    assert H.eval(2, 1) == 33
    assert H.eval(0, 1) == 1
    assert H.terms() == [(8, 2, 0), (1, 0, 2)]


def test_homog_degree_guard():
    with pytest.raises(ValueError):
        HomogPoly.homogenize((0, 0, 1), 1)
