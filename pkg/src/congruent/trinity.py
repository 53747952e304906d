"""A rational differential-geometric system built on three spheres.

The sides of the three derived rational triangles, normalized by their
common quadratic norm and parameterized by t = m/n, trace rational points
on three concentric spheres of squared radii 1, 1/2, 3/2.  Reinterpreting
the three parameterizations as vectors a, b, c yields an orthogonality
structure (a ⟂ b ⟂ c, a·c = 1) that survives differentiation in a long
list of exact identities.  The sphere loci are circles; the trigonometric
circle parameterizations are checked numerically, everything else is
verified symbolically over rational functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .polyrat import Poly, RatFunc
from .triples import derived_triples, euclid

__all__ = [
    "Vec3F",
    "TrigCircle",
    "sphere_params",
    "verify_sphere_relations",
    "trinity_vectors",
    "vec_ops",
    "verify_derivative_identities",
    "sum_of_squares_identity",
    "circles",
    "circle_check",
    "verify_all",
]


@dataclass(frozen=True)
class Vec3F:
    """A 3-vector of rational functions in t."""

    x: RatFunc
    y: RatFunc
    z: RatFunc

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def dot(self, other):
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other):
        return Vec3F(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self):
        return self.dot(self)

    def deriv(self, n=1):
        v = self
        for _ in range(n):
            v = Vec3F(v.x.deriv(), v.y.deriv(), v.z.deriv())
        return v

    def scaled(self, k):
        return Vec3F(self.x * k, self.y * k, self.z * k)

    def hadamard(self, signs):
        """Componentwise multiplication by a scalar triple (sign flips)."""
        s1, s2, s3 = signs
        return Vec3F(self.x * s1, self.y * s2, self.z * s3)

    def __add__(self, other):
        return Vec3F(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return Vec3F(self.x - other.x, self.y - other.y, self.z - other.z)

    def is_zero(self):
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def __call__(self, t):
        return (self.x(t), self.y(t), self.z(t))


def _build_spheres():
    t = Poly.x()
    one = Poly([1])
    d = t**8 + 14 * t**4 + one
    s1 = Vec3F(
        RatFunc((t**4 - one) ** 2, d),
        RatFunc(4 * t**2 * (t**2 + one) ** 2, d),
        RatFunc(4 * t**2 * (t**2 - one) ** 2, d),
    )
    s2 = Vec3F(
        RatFunc(4 * t**2 * (t**4 + one), d),
        RatFunc((t**2 - one) ** 2 * (t**4 + 6 * t**2 + one), 2 * d),
        RatFunc(-((t**2 + one) ** 2) * (t**4 - 6 * t**2 + one), 2 * d),
    )
    s3 = Vec3F(
        RatFunc(t**8 + 6 * t**4 + one, d),
        RatFunc(t**8 + 4 * t**6 + 22 * t**4 + 4 * t**2 + one, 2 * d),
        RatFunc(t**8 - 4 * t**6 + 22 * t**4 - 4 * t**2 + one, 2 * d),
    )
    return {1: (s1, Fraction(1)), 2: (s2, Fraction(1, 2)), 3: (s3, Fraction(3, 2))}


_SPHERES = _build_spheres()


def sphere_params(i):
    """The rational point (x, y, z)_i on sphere i and its squared radius."""
    if i not in (1, 2, 3):
        raise ValueError("sphere index must be 1, 2 or 3")
    return _SPHERES[i]


def verify_sphere_relations(max_order=4):
    """Exact plane, norm, componentwise-Pythagoras and derivative-plane checks.

    Returns a list of (name, bool); every entry must be True.
    """
    (s1, r1), (s2, r2), (s3, r3) = (sphere_params(i) for i in (1, 2, 3))
    checks = [
        ("plane1: x1+y1-z1 = 1", s1.x + s1.y - s1.z == 1),
        ("plane2: x2-y2-z2 = 0", (s2.x - s2.y - s2.z).is_zero()),
        ("plane3: x3+y3+z3 = 2", s3.x + s3.y + s3.z == 2),
        ("norm1 = 1", s1.norm2() == r1),
        ("norm2 = 1/2", s2.norm2() == r2),
        ("norm3 = 3/2", s3.norm2() == r3),
        ("x1^2+x2^2 = x3^2", s1.x**2 + s2.x**2 == s3.x**2),
        ("y1^2+y2^2 = y3^2", s1.y**2 + s2.y**2 == s3.y**2),
        ("z1^2+z2^2 = z3^2", s1.z**2 + s2.z**2 == s3.z**2),
    ]
    d1, d2, d3 = s1, s2, s3
    for n in range(1, max_order + 1):
        d1, d2, d3 = d1.deriv(), d2.deriv(), d3.deriv()
        checks.append((f"d^{n} plane1 = 0", (d1.x + d1.y - d1.z).is_zero()))
        checks.append((f"d^{n} plane2 = 0", (d2.x - d2.y - d2.z).is_zero()))
        checks.append((f"d^{n} plane3 = 0", (d3.x + d3.y + d3.z).is_zero()))
    return checks


def trinity_vectors():
    """The vectors a = (x,y,z)_1, b = (x,-y,z)_2, c = (x,y,-z)_3."""
    s1, _ = sphere_params(1)
    s2, _ = sphere_params(2)
    s3, _ = sphere_params(3)
    a = s1
    b = Vec3F(s2.x, -s2.y, s2.z)
    c = Vec3F(s3.x, s3.y, -s3.z)
    return a, b, c


def vec_ops(u, v, op):
    """Exact dot (RatFunc) or cross (Vec3F) product of two Vec3F."""
    if op == "dot":
        return u.dot(v)
    if op == "cross":
        return u.cross(v)
    raise ValueError("op must be 'dot' or 'cross'")


def _vec_eq(u, v):
    return (u - v).is_zero()


def verify_derivative_identities(max_n=4, max_m=4):
    """The full battery of vector and derivative identities, exactly.

    Covers the base orthogonality/norm facts, triple products, the
    same-order derivative relations, and the mixed-order dot/cross
    symmetries for 1 <= n <= max_n, 1 <= m <= max_m.
    Returns a list of (name, bool).
    """
    if max_n < 1 or max_m < 1:
        raise ValueError("derivative orders must be >= 1")
    a, b, c = trinity_vectors()
    checks = [
        ("a.b = 0", a.dot(b).is_zero()),
        ("b.c = 0", b.dot(c).is_zero()),
        ("a.c = 1", a.dot(c) == 1),
        ("|a|^2 = 1", a.norm2() == 1),
        ("|b|^2 = 1/2", b.norm2() == Fraction(1, 2)),
        ("|c|^2 = 3/2", c.norm2() == Fraction(3, 2)),
        ("cos^2(a,c) = 2/3", a.dot(c) ** 2 == Fraction(2, 3) * a.norm2() * c.norm2()),
        (
            "cos^2(axb,c) = 1/3",
            a.cross(b).dot(c) ** 2
            == Fraction(1, 3) * a.cross(b).norm2() * c.norm2(),
        ),
        (
            "cos^2(bxc,a) = 1/3",
            b.cross(c).dot(a) ** 2
            == Fraction(1, 3) * b.cross(c).norm2() * a.norm2(),
        ),
        ("a.(bxc) = 1/2", a.dot(b.cross(c)) == Fraction(1, 2)),
        ("b.(cxa) = 1/2", b.dot(c.cross(a)) == Fraction(1, 2)),
        ("c.(axb) = 1/2", c.dot(a.cross(b)) == Fraction(1, 2)),
        ("ax(bxc) = b", _vec_eq(a.cross(b.cross(c)), b)),
        ("cx(bxa) = b", _vec_eq(c.cross(b.cross(a)), b)),
        ("cxa = b", _vec_eq(c.cross(a), b)),
        ("bx(axc) = 0", b.cross(a.cross(c)).is_zero()),
    ]
    da = [a]
    db = [b]
    dc = [c]
    top = max(max_n, max_m)
    for _ in range(top):
        da.append(da[-1].deriv())
        db.append(db[-1].deriv())
        dc.append(dc[-1].deriv())
    for n in range(1, max_n + 1):
        an, bn, cn = da[n], db[n], dc[n]
        ac = an.dot(cn)
        checks.append((f"d{n}a.d{n}b = 0", an.dot(bn).is_zero()))
        checks.append((f"d{n}b.d{n}c = 0", bn.dot(cn).is_zero()))
        checks.append((f"d{n}a.d{n}c = |d{n}a|^2/2", 2 * ac == an.norm2()))
        checks.append(
            (f"d{n}a.d{n}c = 2|d{n}b|^2/3", 3 * ac == 2 * bn.norm2())
        )
        checks.append((f"d{n}a.d{n}c = 2|d{n}c|^2", ac == 2 * cn.norm2()))
        checks.append((f"d{n}a x d{n}c = 0", an.cross(cn).is_zero()))
    ones = (1, 1, -1)
    flip = (-1, -1, 1)
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            an, bn = da[n], db[n]
            am, cm = da[m], dc[m]
            bm, cn = db[m], dc[n]
            checks.append(
                (f"2 d{n}b.d{m}c = d{n}b.d{m}a", 2 * bn.dot(cm) == bn.dot(am))
            )
            checks.append(
                (
                    f"2 d{n}b x d{m}c = d{n}b x d{m}a",
                    _vec_eq(bn.cross(cm).scaled(2), bn.cross(am)),
                )
            )
            checks.append(
                (
                    f"3 d{n}a.d{m}a = 4 d{n}b.d{m}b",
                    3 * an.dot(am) == 4 * bn.dot(bm),
                )
            )
            checks.append(
                (
                    f"3 d{n}a.d{m}a = 12 d{n}c.d{m}c",
                    an.dot(am) == 4 * cn.dot(cm),
                )
            )
            checks.append(
                (
                    f"3 d{n}a x d{m}a = 4 d{n}b x d{m}b",
                    _vec_eq(an.cross(am).scaled(3), bn.cross(bm).scaled(4)),
                )
            )
            checks.append(
                (
                    f"3 d{n}a x d{m}a = 12 d{n}c x d{m}c",
                    _vec_eq(an.cross(am), cn.cross(cm).scaled(4)),
                )
            )
            dot_ac = an.dot(cm)
            scaled = Vec3F(dot_ac * flip[0], dot_ac * flip[1], dot_ac * flip[2])
            checks.append(
                (
                    f"(d{n}a.d{m}c)(-1,-1,1) = 2 d{n}b x d{m}c",
                    _vec_eq(scaled, bn.cross(cm).scaled(2)),
                )
            )
            checks.append(
                (
                    f"2 d{n}b x d{m}c = d{n}b x d{m}a",
                    _vec_eq(bn.cross(cm).scaled(2), bn.cross(am)),
                )
            )
            dot_bc = bn.dot(cm)
            scaled2 = Vec3F(dot_bc * ones[0], dot_bc * ones[1], dot_bc * ones[2])
            checks.append(
                (
                    f"3 d{n}a x d{m}c = 2(d{n}b.d{m}c)(1,1,-1)",
                    _vec_eq(an.cross(cm).scaled(3), scaled2.scaled(2)),
                )
            )
            dot_ba = bn.dot(am)
            scaled3 = Vec3F(dot_ba * ones[0], dot_ba * ones[1], dot_ba * ones[2])
            checks.append(
                (
                    f"3 d{n}a x d{m}c = (d{n}b.d{m}a)(1,1,-1)",
                    _vec_eq(an.cross(cm).scaled(3), scaled3),
                )
            )
    return checks


def sum_of_squares_identity(m, n):
    """The common squared norm of the three side vectors for one (m, n).

    Verifies sum a_i^2 = 2 sum b_i^2 = (2/3) sum c_i^2
    = (2(C^4 - (AB)^2)/(ABC))^2 over the derived triples.
    """
    t = euclid(m, n)
    ac, bc, ba = derived_triples(m, n)
    sa = ac.a**2 + bc.a**2 + ba.a**2
    sb = ac.b**2 + bc.b**2 + ba.b**2
    sc = ac.c**2 + bc.c**2 + ba.c**2
    rhs = Fraction(2 * (t.c**4 - (t.a * t.b) ** 2), t.a * t.b * t.c) ** 2
    holds = sa == 2 * sb == Fraction(2, 3) * sc == rhs
    return {"sum_a2": sa, "sum_b2": sb, "sum_c2": sc, "rhs": rhs, "holds": holds}


@dataclass(frozen=True)
class TrigCircle:
    """One signed copy of a trigonometric circle from the sphere loci."""

    family: int
    signs: tuple
    center: tuple
    radius2: Fraction
    plane: tuple  # (n1, n2, n3, const) with n1 x + n2 y + n3 z = const

    def point(self, angle):
        """Float coordinates of the parameterized point at this angle."""
        cs, sn = math.cos(angle), math.sin(angle)
        if self.family == 1:
            base = (
                1 / 3 - cs / math.sqrt(3) - sn / 3,
                1 / 3 + cs / math.sqrt(3) - sn / 3,
                1 / 3 + 2 * sn / 3,
            )
        elif self.family == 2:
            base = (
                -cs / 2 - sn / (2 * math.sqrt(3)),
                -cs / 2 + sn / (2 * math.sqrt(3)),
                -sn / math.sqrt(3),
            )
        else:
            base = (
                2 / 3 - cs / (2 * math.sqrt(3)) - sn / 6,
                2 / 3 + cs / (2 * math.sqrt(3)) - sn / 6,
                2 / 3 + sn / 3,
            )
        return tuple(s * v for s, v in zip(self.signs, base))


# Squared radii of the spheres each circle family lives on, and of the
# second sphere family whose intersection with the first retraces the
# circle (families 1 and 3 only).
_FAMILY = {
    1: dict(sphere2=Fraction(1), radius2=Fraction(2, 3), center=Fraction(1, 3), const=Fraction(1)),
    2: dict(sphere2=Fraction(1, 2), radius2=Fraction(1, 2), center=Fraction(0), const=Fraction(0)),
    3: dict(sphere2=Fraction(3, 2), radius2=Fraction(1, 6), center=Fraction(2, 3), const=Fraction(2)),
}
_INTERSECT = {
    1: dict(second_center=Fraction(1), second_radius2=Fraction(2)),
    3: dict(second_center=Fraction(3, 4), second_radius2=Fraction(3, 16)),
}


def circles():
    """All 20 signed circles: 8 + 4 + 8 across the three families."""
    out = []
    for family in (1, 2, 3):
        info = _FAMILY[family]
        if family == 2:
            # flipping all three signs retraces the same circle, so only
            # sign patterns up to global negation are distinct
            sign_sets = [(1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1)]
        else:
            sign_sets = list(product((1, -1), repeat=3))
        for signs in sign_sets:
            center = tuple(Fraction(s) * info["center"] for s in signs)
            if family == 2:
                plane = (signs[0], -signs[1], -signs[2], Fraction(0))
            else:
                plane = (signs[0], signs[1], signs[2], info["const"])
            out.append(
                TrigCircle(family, signs, center, info["radius2"], plane)
            )
    return out


def circle_check(samples=32):
    """Numeric verification of every signed circle at sampled angles.

    At each angle the point must lie on its sphere, on its plane, at the
    right squared distance from its center, and (families 1 and 3) on the
    second sphere of the intersection-path description.  Returns a dict
    with the maximum residual and a pass flag (tolerance 1e-9).
    """
    if samples < 8:
        raise ValueError("need at least 8 samples")
    tol = 1e-9
    worst = 0.0
    count = 0
    for circ in circles():
        info = _FAMILY[circ.family]
        inter = _INTERSECT.get(circ.family)
        for k in range(samples):
            angle = 2 * math.pi * k / samples + 0.123
            p = circ.point(angle)
            norm2 = sum(v * v for v in p)
            worst = max(worst, abs(norm2 - float(info["sphere2"])))
            n1, n2, n3, const = circ.plane
            worst = max(
                worst,
                abs(float(n1) * p[0] + float(n2) * p[1] + float(n3) * p[2] - float(const)),
            )
            d2 = sum((v - float(cc)) ** 2 for v, cc in zip(p, circ.center))
            worst = max(worst, abs(d2 - float(circ.radius2)))
            if inter is not None:
                c2 = inter["second_center"]
                d2b = sum(
                    (v - s * float(c2)) ** 2 for v, s in zip(p, circ.signs)
                )
                worst = max(worst, abs(d2b - float(inter["second_radius2"])))
            count += 1
    return {
        "circles": 20,
        "samples": samples,
        "points": count,
        "max_residual": worst,
        "ok": worst < tol,
    }


def verify_all(max_order=4, samples=32):
    """Every symbolic and numeric check in this module as (name, ok) pairs."""
    checks = list(verify_sphere_relations(max_order))
    checks += verify_derivative_identities(max_order, max_order)
    for mm, nn in ((2, 1), (3, 2), (4, 1), (5, 2)):
        checks.append(
            (f"side-vector norm identity (m,n)=({mm},{nn})",
             sum_of_squares_identity(mm, nn)["holds"])
        )
    rep = circle_check(samples)
    checks.append(("trig circles numeric", rep["ok"]))
    return checks
