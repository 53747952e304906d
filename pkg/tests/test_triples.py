from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from congruent.triples import (
    RatTriangle,
    area_identity_check,
    area_quad,
    concordant_solutions,
    connecting_points,
    derived_triples,
    distance_identity,
    euclid,
)

F = Fraction

admissible_mn = (
    st.tuples(st.integers(2, 60), st.integers(1, 59))
    .filter(lambda t: t[1] < t[0] and gcd(*t) == 1 and (t[0] - t[1]) % 2 == 1)
)


def test_euclid_baseline():
    t = euclid(2, 1)
    assert (t.a, t.b, t.c) == (3, 4, 5)
    assert t.area == 6


@given(admissible_mn)
@settings(max_examples=100)
def test_euclid_is_primitive_pythagorean(mn):
    m, n = mn
    t = euclid(m, n)
    assert t.a**2 + t.b**2 == t.c**2
    assert gcd(t.a, gcd(t.b, t.c)) == 1


def test_euclid_rejects_bad_parameters():
    for m, n in ((1, 1), (2, 3), (2, 0)):
        with pytest.raises(ValueError):
            euclid(m, n)


def test_derived_triples_baseline():
    ac, bc, ba = derived_triples(2, 1)
    assert ac == RatTriangle(F(15, 2), F(136, 15), F(353, 30))
    assert bc == RatTriangle(F(40, 3), F(123, 20), F(881, 60))
    assert ba == RatTriangle(F(24, 5), F(35, 12), F(337, 60))


@given(admissible_mn)
@settings(max_examples=60, deadline=None)
def test_derived_areas_match_quadruple(mn):
    m, n = mn
    q = area_quad(m, n)
    ac, bc, ba = derived_triples(m, n)
    assert ac.area == q.n_ac
    assert bc.area == q.n_bc
    assert ba.area == q.n_ba
    assert euclid(m, n).area == q.n


def test_area_quad_baseline():
    q = area_quad(2, 1)
    assert (q.n, q.n_ac, q.n_bc, q.n_ba) == (6, 34, 41, 7)


def test_area_identity_value():
    rep = area_identity_check(2, 1)
    assert rep["holds"]
    assert rep["lhs"] == rep["rhs"] == 2886


@given(admissible_mn)
@settings(max_examples=60, deadline=None)
def test_area_identity_generic(mn):
    assert area_identity_check(*mn)["holds"]


def test_connecting_points_on_curves():
    pairs = connecting_points(2, 1)
    assert [(p.x, p.y) for _, p in pairs] == [(-16, 120), (-9, 120), (25, 120)]


def test_concordant_solutions_satisfy_both_forms():
    sols = concordant_solutions(2, 1)
    for s in sols:
        assert s.x**2 + s.n * s.y**2 == s.z**2
        assert s.x**2 - s.n * s.y**2 == s.t**2
    assert [(s.x, s.y, s.z, s.t, s.n) for s in sols] == [
        (706, 120, 994, 94, 34),
        (881, 120, 1169, 431, 41),
        (337, 120, 463, 113, 7),
    ]


@given(admissible_mn)
@settings(max_examples=40, deadline=None)
def test_distance_identity_generic(mn):
    rep = distance_identity(*mn)
    assert rep["holds"]
    assert rep["lhs_root"] ** 2 == sum(v**2 for v in rep["quadruple"][1:])


def test_rat_triangle_rejects_non_pythagorean():
    with pytest.raises((ValueError, AssertionError)):
        RatTriangle(F(1), F(1), F(1))
