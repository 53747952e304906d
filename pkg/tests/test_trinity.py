from fractions import Fraction
from math import gcd

from hypothesis import given, settings, strategies as st

from congruent import trinity

F = Fraction


def test_sphere_relations_low_order():
    checks = trinity.verify_sphere_relations(max_order=2)
    assert checks and all(ok for _, ok in checks)


def test_vector_cross_and_dot_structure():
    vecs = trinity.trinity_vectors()
    assert len(vecs) == 3
    for u in vecs:
        assert not u.is_zero()
    u, v, w = vecs
    # scalar triple product is antisymmetric under swapping two arguments
    assert u.cross(v).dot(w) == -v.cross(u).dot(w)


def test_vec_ops_dot_and_cross():
    u, v, _ = trinity.trinity_vectors()
    c = trinity.vec_ops(u, v, "cross")
    # the cross product is orthogonal to both factors, symbolically
    assert trinity.vec_ops(c, u, "dot").is_zero()
    assert trinity.vec_ops(c, v, "dot").is_zero()


def test_vec_ops_rejects_unknown_op():
    u, v, _ = trinity.trinity_vectors()
    try:
        trinity.vec_ops(u, v, "wedge")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_derivative_identities_small():
    checks = trinity.verify_derivative_identities(max_n=2, max_m=2)
    assert checks and all(ok for _, ok in checks)


@given(
    st.tuples(st.integers(2, 40), st.integers(1, 39)).filter(
        lambda t: t[1] < t[0] and gcd(*t) == 1 and (t[0] - t[1]) % 2 == 1
    )
)
@settings(max_examples=60, deadline=None)
def test_sum_of_squares_identity(mn):
    rep = trinity.sum_of_squares_identity(*mn)
    assert rep["holds"]


def test_circle_check_small_sample():
    rep = trinity.circle_check(samples=8)
    assert rep["ok"]
    assert rep["points"] == 20 * 8


def test_circle_check_rejects_tiny_sample():
    try:
        trinity.circle_check(samples=4)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_twenty_signed_circles():
    cs = trinity.circles()
    assert len(cs) == 20
    by_family = {}
    for c in cs:
        by_family.setdefault(c.family, 0)
        by_family[c.family] += 1
    assert by_family == {1: 8, 2: 4, 3: 8}


def test_verify_all_low_order():
    checks = trinity.verify_all(max_order=1, samples=8)
    assert checks and all(ok for _, ok in checks)
