"""Congruent numbers and Cassini ovals via Heegner's quadratic systems.

Two systems of equations translate a congruent-number datum (N, f1, f2)
into the four Heegner variables c1..c4; the c's are simultaneously the
sides of a rational right triangle of area N and the axis intersections
of a Cassini oval.  The first system gives ovals with two X-axis
intersections (one loop), the second gives two separate loops with four
X-axis intersections.  All oval geometry is carried in squared
coordinates so adjoined (irrational) c values stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import rat_sqrt
from .triples import RatTriangle

__all__ = [
    "HeegnerQuad",
    "CassiniOval",
    "heegner_two",
    "heegner_four",
    "oval_axis_points",
]


@dataclass(frozen=True)
class HeegnerQuad:
    """The four quadratic-system values; c1, c3, c4 stored squared.

    Any of c1, c3, c4 may be an integer multiple of sqrt(N) or sqrt(2N);
    the squared fields are always exact rationals and the plain
    properties return the exact root when it is rational, else None.
    """

    c1sq: Fraction
    c2: Fraction
    c3sq: Fraction
    c4sq: Fraction

    @property
    def c1(self):
        return rat_sqrt(self.c1sq)

    @property
    def c3(self):
        return rat_sqrt(self.c3sq)

    @property
    def c4(self):
        return rat_sqrt(self.c4sq)


@dataclass(frozen=True)
class CassiniOval:
    """(w x^2 + y^2 + a'^2)^2 - 4 a'^2 w x^2 = b'^4 in squared coordinates.

    x_weight w is 1 for the classical oval and 2 for the stretched form
    used by the four-intersection system.  loops is 'one' when the curve
    is a single closed curve (b' > a'), 'two' when it splits around the
    foci (b' < a'), 'lemniscate' at the transition.
    """

    a2: Fraction
    b4: Fraction
    x_weight: int = 1

    def __post_init__(self):
        if self.b4 <= 0 or self.a2 < 0:
            raise ValueError("need a'^2 >= 0 and b'^4 > 0")
        if self.x_weight not in (1, 2):
            raise ValueError("x_weight must be 1 or 2")

    @property
    def loops(self):
        if self.b4 > self.a2**2:
            return "one"
        if self.b4 < self.a2**2:
            return "two"
        return "lemniscate"

    def residual(self, x2, y2):
        """Exact value of the defining quartic at squared coordinates."""
        w = self.x_weight
        return (w * x2 + y2 + self.a2) ** 2 - 4 * self.a2 * w * x2 - self.b4

    def y_squared(self, x):
        """Largest y^2 on the oval above abscissa x, as an exact pair.

        Returns (s, r) meaning y^2 = sqrt(s) - r; callers needing floats
        evaluate the square root themselves.
        """
        x = Fraction(x)
        w = self.x_weight
        return 4 * self.a2 * w * x**2 + self.b4, w * x**2 + self.a2


def oval_axis_points(oval):
    """Exact axis intersections of the oval, in squared coordinates.

    Returns a dict with x2 (list of x^2 values for points (±x, 0)),
    y2 (list of y^2 values for points (0, ±y)) and the loop class.
    b'^2 must be rational (it always is here: b'^4 = c1^4 N^2).
    """
    b2 = rat_sqrt(oval.b4)
    if b2 is None:
        raise ValueError("b'^2 irrational; axis points not representable")
    w = oval.x_weight
    x2 = []
    for val in (oval.a2 + b2, oval.a2 - b2):
        v = Fraction(val, w)
        if v > 0:
            x2.append(v)
    y2 = []
    if b2 > oval.a2:
        y2.append(b2 - oval.a2)
    for v in x2:
        if oval.residual(v, Fraction(0)) != 0:
            raise AssertionError("X-axis point off the oval")
    for v in y2:
        if oval.residual(Fraction(0), v) != 0:
            raise AssertionError("Y-axis point off the oval")
    return {"x2": x2, "y2": y2, "loops": oval.loops}


def _f2sq(n, f2, adjoin):
    f2 = Fraction(f2)
    if adjoin == "none":
        return f2**2
    if adjoin == "sqrtN":
        return f2**2 * n
    if adjoin == "sqrt2N":
        return f2**2 * 2 * n
    raise ValueError(f"unknown adjunction class {adjoin!r}")


def heegner_two(n, f1, f2, adjoin="none"):
    """The two-intersection system: quad, triangle and oval for (N, f1, f2).

    c1 = |f1 f2|, c2 = |N f1^2 - f2^2|/2, c3^2 = |N c1^2 - c2^2|,
    c4^2 = N c1^2 + c2^2; the triangle (c3c4/(c1c2), 2c1c2N/(c3c4), ...)
    has area N; the oval is (a', b') = (c2, c1 sqrt(N)).
    """
    f2sq = _f2sq(n, f2, adjoin)
    c1sq = f1**2 * f2sq
    if c1sq == 0:
        raise ValueError("f1 f2 must be nonzero")
    c2 = abs(Fraction(n * f1**2 - f2sq, 2))
    if c2 == 0:
        raise ValueError("degenerate input: N f1^2 = f2^2")
    c3sq = abs(n * c1sq - c2**2)
    if c3sq == 0:
        raise ValueError("N c1^2 = c2^2: triangle degenerates")
    c4sq = n * c1sq + c2**2
    quad = HeegnerQuad(c1sq, c2, c3sq, c4sq)
    c4 = quad.c4
    if c4 is None:
        raise ValueError("c4 irrational: invalid adjunction for this system")
    c3c1 = rat_sqrt(c3sq * c1sq)
    if c3c1 is None:
        raise ValueError("c1 c3 irrational: sides do not rationalize")
    a = c3c1 * c4 / (c1sq * c2)
    b = 2 * n * c1sq * c2 / (c3c1 * c4)
    c = rat_sqrt(a**2 + b**2)
    if c is None:
        raise AssertionError("two-intersection hypotenuse irrational")
    tri = RatTriangle(a, b, c)
    if tri.area != n:
        raise AssertionError("two-intersection triangle area mismatch")
    oval = CassiniOval(c2**2, c1sq**2 * n**2, x_weight=1)
    return quad, tri, oval


def heegner_four(n, f1, f2sq):
    """The four-intersection system for (N, f1, f2) with f2^2 = f2sq.

    c3 = f1^2 - f2^2, c4 = 2 f1 f2, c2 = f1^2 + f2^2,
    c1^2 = (c4^2 - c3^2)/N; the oval (weight-2 form) meets the X axis in
    the four points ±c3, ±c4 and the triangle (c1c2N/(c3c4), 2c3c4/(c1c2),
    ...) has area N.
    """
    f2sq = Fraction(f2sq)
    if f2sq <= 0:
        raise ValueError("f2^2 must be positive")
    c3 = Fraction(f1**2) - f2sq
    c4sq = 4 * f1**2 * f2sq
    c2 = Fraction(f1**2) + f2sq
    if c4sq <= c3**2:
        raise ValueError("c4^2 <= c3^2: no valid four-intersection system")
    c1sq = (c4sq - c3**2) / n
    quad = HeegnerQuad(c1sq, c2, c3**2, c4sq)
    c1c4 = rat_sqrt(c1sq * c4sq)
    if c1c4 is None or c3 == 0:
        raise ValueError("sides do not rationalize for this (N, f1, f2)")
    a = n * c2 * c1c4 / (abs(c3) * c4sq)
    b = 2 * abs(c3) * c4sq / (c2 * c1c4)
    c = rat_sqrt(a**2 + b**2)
    if c is None:
        raise AssertionError("four-intersection hypotenuse irrational")
    tri = RatTriangle(a, b, c)
    if tri.area != n:
        raise AssertionError("four-intersection triangle area mismatch")
    oval = CassiniOval(c2**2, c1sq**2 * n**2, x_weight=2)
    points = oval_axis_points(oval)
    expected = sorted((c3**2, c4sq))
    if sorted(points["x2"]) != expected:
        raise AssertionError("oval X-axis intersections disagree with ±c3, ±c4")
    return quad, tri, oval, points
