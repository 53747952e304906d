"""Rational right triangles derived from Euclid's parameterization.

From one integer Pythagorean triple (A, B, C) three rational right
triangles are built by pairing its sides; their areas are congruent
numbers tied together by a single quartic identity.  Also here: the
collinear points those areas induce on the curves y^2 = x^3 - N^2 x,
Euler concordant-form solutions read off the hypotenuses, and the
three-dimensional distance identity of the side differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elliptic import Curve, Point, curve_en
from .exact import is_square, rat_sqrt, squarefree_part

__all__ = [
    "PythTriple",
    "RatTriangle",
    "AreaQuad",
    "ConcordantSolution",
    "euclid",
    "derived_triples",
    "area_quad",
    "area_identity_check",
    "connecting_points",
    "concordant_solutions",
    "distance_identity",
]


@dataclass(frozen=True)
class PythTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a**2 + self.b**2 != self.c**2:
            raise ValueError(f"({self.a}, {self.b}, {self.c}) is not Pythagorean")

    @property
    def area(self):
        return Fraction(self.a * self.b, 2)


@dataclass(frozen=True)
class RatTriangle:
    """A right triangle with exact rational (possibly signed) sides."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a, b, c):
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a**2 + b**2 != c**2:
            raise ValueError(f"sides ({a}, {b}, {c}) violate a^2 + b^2 = c^2")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def area(self):
        """Signed area a*b/2; the associated congruent number up to squares."""
        return self.a * self.b / 2

    def congruent_number(self):
        """|squarefree part of numerator*denominator| of the area."""
        n = self.area
        return abs(squarefree_part(n.numerator * n.denominator))

    def scaled(self, factor):
        """Similar triangle with both legs divided by factor."""
        factor = Fraction(factor)
        return RatTriangle(self.a / factor, self.b / factor, self.c / factor)

    def __str__(self):
        from .exact import format_rat

        return f"({format_rat(self.a)}, {format_rat(self.b)}, {format_rat(self.c)})"


@dataclass(frozen=True)
class AreaQuad:
    """The four areas (N, N_AC, N_BC, N_BA); N_BA may be negative."""

    n: int
    n_ac: int
    n_bc: int
    n_ba: int


@dataclass(frozen=True)
class ConcordantSolution:
    """Integers with x^2 + N y^2 = z^2 and x^2 - N y^2 = t^2."""

    x: int
    y: int
    z: int
    t: int
    n: int

    def __post_init__(self):
        if self.x**2 + self.n * self.y**2 != self.z**2:
            raise ValueError("concordant form x^2 + N y^2 = z^2 fails")
        if self.x**2 - self.n * self.y**2 != self.t**2:
            raise ValueError("concordant form x^2 - N y^2 = t^2 fails")


def _check_mn(m, n):
    if not (m > n > 0):
        raise ValueError(f"need m > n > 0, got (m, n) = ({m}, {n})")


def euclid(m, n):
    """Euclid's fundamental formula (m^2 - n^2, 2mn, m^2 + n^2)."""
    _check_mn(m, n)
    return PythTriple(m**2 - n**2, 2 * m * n, m**2 + n**2)


def derived_triples(m, n):
    """The three rational triples built by pairing sides of euclid(m, n).

    Returns (AC, BC, BA); BA's middle side goes negative once B < A.
    """
    _check_mn(m, n)
    t = euclid(m, n)
    a, b, c = t.a, t.b, t.c
    ac = RatTriangle(
        Fraction(2 * a * c, b),
        Fraction(b * (a**2 + c**2), a * c),
        Fraction(a**4 + c**4, a * b * c),
    )
    bc = RatTriangle(
        Fraction(2 * b * c, a),
        Fraction(a * (b**2 + c**2), b * c),
        Fraction(b**4 + c**4, a * b * c),
    )
    ba = RatTriangle(
        Fraction(2 * b * a, c),
        Fraction(c * (b**2 - a**2), b * a),
        Fraction(b**4 + a**4, a * b * c),
    )
    return ac, bc, ba


def area_quad(m, n):
    """(N, N_AC, N_BC, N_BA) = (AB/2, A^2+C^2, B^2+C^2, B^2-A^2)."""
    t = euclid(m, n)
    a, b, c = t.a, t.b, t.c
    return AreaQuad(a * b // 2, a**2 + c**2, b**2 + c**2, b**2 - a**2)


def area_identity_check(m, n):
    """Both sides of N_AC^2 + N_BC^2 + N_BA^2 = 6(C^4 - 4N^2)."""
    q = area_quad(m, n)
    c = euclid(m, n).c
    lhs = q.n_ac**2 + q.n_bc**2 + q.n_ba**2
    rhs = 6 * (c**4 - 4 * q.n**2)
    return {"quad": q, "lhs": lhs, "rhs": rhs, "holds": lhs == rhs}


def connecting_points(m, n):
    """The collinear points at y = 2ABC on the three area curves.

    Returns three (curve, point) pairs; each curve is y^2 = x^3 - N^2 x
    built from the squared area, so the sign of N_BA does not matter.
    """
    t = euclid(m, n)
    a, b, c = t.a, t.b, t.c
    q = area_quad(m, n)
    y = 2 * a * b * c
    pairs = (
        (curve_en(q.n_ac), Point(Fraction(-(b**2)), Fraction(y))),
        (curve_en(q.n_bc), Point(Fraction(-(a**2)), Fraction(y))),
        (curve_en(q.n_ba), Point(Fraction(c**2), Fraction(y))),
    )
    for curve, p in pairs:
        if not curve.contains(p):
            raise AssertionError(f"connecting point {p} off its curve")
    return pairs


def concordant_solutions(m, n):
    """Euler concordant-form solutions for the AC, BC and BA hypotenuses.

    (x, y) is (numerator of c, 2 * denominator of c); z and t come from
    the radical definitions and all three y values equal 2ABC.
    """
    t = euclid(m, n)
    a, b, c = t.a, t.b, t.c
    q = area_quad(m, n)
    y = 2 * a * b * c
    out = []
    for x, area in (
        (a**4 + c**4, q.n_ac),
        (b**4 + c**4, q.n_bc),
        (b**4 + a**4, q.n_ba),
    ):
        z = is_square(x**2 + area * y**2)
        tt = is_square(x**2 - area * y**2)
        if z is None or tt is None:
            raise AssertionError("concordant radicals are not perfect squares")
        out.append(ConcordantSolution(x, y, z, tt, area))
    return tuple(out)


def distance_identity(m, n):
    """The squared-distance identity for the vectors of first sides vs hypotenuses.

    With d_i = c_i - a_i over the AC, BC, BA triples, verifies
        (2(C^4 - 3(AB)^2)/(ABC))^2 = 2*sum d_i^2 = (sum d_i)^2
                                   = 4*(d1 d2 + d1 d3 + d2 d3)
    and that each product 4 d_i d_j is a perfect rational square, returning
    the resulting Pythagorean quadruple decomposition of (sum d_i)^2.
    """
    t = euclid(m, n)
    ac, bc, ba = derived_triples(m, n)
    d1 = ac.c - ac.a
    d2 = bc.c - bc.a
    d3 = ba.c - ba.a
    lhs_root = Fraction(2 * (t.c**4 - 3 * (t.a * t.b) ** 2), t.a * t.b * t.c)
    lhs = lhs_root**2
    total = d1 + d2 + d3
    eq16 = lhs == 2 * (d1**2 + d2**2 + d3**2)
    eq17 = lhs == total**2
    eq18 = lhs == 4 * (d1 * d2 + d1 * d3 + d2 * d3)
    # the three pairwise products as squares of signed combinations
    u = d1 + d2 - d3
    v = d1 - d2 + d3
    w = -d1 + d2 + d3
    eq19 = (
        4 * d1 * d2 == u**2
        and 4 * d1 * d3 == v**2
        and 4 * d2 * d3 == w**2
    )
    squares_exist = all(
        rat_sqrt(4 * p) is not None
        for p in (d1 * d2, d1 * d3, d2 * d3)
    )
    quadruple = (total, u, v, w)
    decomposition = total**2 == u**2 + v**2 + w**2
    return {
        "diffs": (d1, d2, d3),
        "lhs_root": lhs_root,
        "quadruple": quadruple,
        "eq_sum_of_squares": eq16,
        "eq_square_of_sum": eq17,
        "eq_products": eq18,
        "eq_products_are_squares": eq19 and squares_exist,
        "eq_quadruple": decomposition,
        "holds": eq16 and eq17 and eq18 and eq19 and squares_exist and decomposition,
    }
