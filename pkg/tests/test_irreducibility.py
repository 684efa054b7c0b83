from fractions import Fraction

import pytest

from ubdyn import polyz
from ubdyn.irreducibility import (
    IrreducibilityUndecided,
    irreducible_over_q,
)


def test_quadratic_no_rational_root():
    r = irreducible_over_q((8, 0, 1))
    assert r.irreducible
    assert r.certificate["method"] == "rational_root_test"


def test_t4_plus_1_needs_factor_search():
    # reducible mod every prime, so only the exhaustive search can certify
    r = irreducible_over_q((1, 0, 0, 0, 1))
    assert r.irreducible
    assert r.certificate["method"] == "factor_search"


def test_t2_minus_1_factors():
    r = irreducible_over_q((-1, 0, 1))
    assert not r.irreducible
    g, h = r.factors
    assert polyz.mul(g, h) == (-1, 0, 1)
    assert {g, h} == {(-1, 1), (1, 1)}


def test_mod_prime_certificate():
    # t^4 + t + 1 is irreducible mod 2
    r = irreducible_over_q((1, 1, 0, 0, 1))
    assert r.irreducible
    assert r.certificate["method"] == "mod_prime"


def test_cyclotomic_phi12():
    # t^4 - t^2 + 1 is irreducible (12th cyclotomic)
    assert irreducible_over_q((1, 0, -1, 0, 1)).irreducible


def test_product_of_quadratics_found():
    p = polyz.mul((2, 0, 1), (3, 1, 1))
    r = irreducible_over_q(p)
    assert not r.irreducible
    g, h = r.factors
    assert polyz.mul(g, h) == p
    assert polyz.degree(g) == 2 and polyz.degree(h) == 2


def test_rational_root_nonmonic():
    # (2t - 1)(t^2 + t + 1)
    p = polyz.mul((-1, 2), (1, 1, 1))
    r = irreducible_over_q(p)
    assert not r.irreducible
    assert polyz.mul(*r.factors) == p


def test_degree_cap():
    p = tuple([1] + [0] * 16 + [1])  # degree 17
    with pytest.raises(IrreducibilityUndecided):
        irreducible_over_q(p)


def test_degree_six_products():
    # (t^3 - 2)(t^3 - 3): both cubics irreducible, product must split
    a, b = (-2, 0, 0, 1), (-3, 0, 0, 1)
    p = polyz.mul(a, b)
    r = irreducible_over_q(p)
    assert not r.irreducible
    assert polyz.mul(*r.factors) == p


@pytest.mark.parametrize(
    "p", [(-2, 0, 0, 1), (5, 3, 0, 0, 0, 1), (7, 0, 0, 0, 0, 0, 1)]
)
def test_known_irreducibles(p):
    # Eisenstein at 2, 5 resp. 7
    assert irreducible_over_q(p).irreducible
