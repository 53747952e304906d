"""Dense univariate polynomials and rational functions over exact rationals.

Coefficients are Fractions stored lowest degree first.  Rational functions
normalize to coprime numerator/denominator with a monic denominator, so
structural equality is semantic equality.  Polynomial gcds run over the
integer primitive parts with content stripped at every remainder step,
which keeps the coefficient growth of the Euclidean algorithm in check at
the degrees (< a few hundred) this package produces.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

__all__ = ["Poly", "RatFunc", "chebyshev"]


class Poly:
    """A univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return Poly([other]) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        """Exact rational-coefficient polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        d = other.degree
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            q = rem[-1] / lead
            quo[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quo), Poly(rem)

    def deriv(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_float(self, t):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + float(c)
        return acc

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs])

    def _int_primitive(self):
        """Primitive integer-coefficient version of self (content stripped)."""
        if self.is_zero():
            return []
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for c in ints:
            g = int_gcd(g, c)
        return [c // g for c in ints]

    def gcd(self, other):
        """Monic gcd via a primitive remainder sequence over the integers."""
        a, b = self._int_primitive(), other._int_primitive()
        if not a:
            return other.monic()
        if not b:
            return self.monic()
        while b:
            a, b = b, _int_prem(a, b)
        g = 0
        for c in a:
            g = int_gcd(g, c)
        return Poly([Fraction(c, g) for c in a]).monic()

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = _fmt_coeff(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{_fmt_coeff(mag)}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"({c})"


def _int_prem(a, b):
    """Primitive pseudo-remainder of integer coefficient lists a mod b."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db:
        k = len(a) - 1 - db
        la = a[-1]
        g = int_gcd(la, lead)
        mul_a, mul_b = lead // g, la // g
        for i in range(len(a)):
            a[i] *= mul_a
        for i, c in enumerate(b):
            a[k + i] -= mul_b * c
        while a and a[-1] == 0:
            a.pop()
    if not a:
        return []
    g = 0
    for c in a:
        g = int_gcd(g, c)
    return [c // g for c in a]


class RatFunc:
    """A quotient of two Polys, kept coprime with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if not isinstance(num, Poly):
            num = Poly([num]) if isinstance(num, (int, Fraction)) else Poly(num)
        if den is None:
            den = Poly([1])
        elif not isinstance(den, Poly):
            den = Poly([den]) if isinstance(den, (int, Fraction)) else Poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            if num.is_zero():
                den = Poly([1])
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num, _ = num.divmod(g)
                    den, _ = den.divmod(g)
                lead = den.coeffs[-1]
                if lead != 1:
                    num = num * (1 / lead)
                    den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def t(cls):
        return cls(Poly.x())

    @classmethod
    def const(cls, c):
        return cls(Poly([c]))

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.const(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def cross_equal(self, other):
        """Equality by cross-multiplication; test oracle for normalization."""
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return self.num * other.den == other.num * self.den

    def deriv(self, n=1):
        """Exact n-th derivative via the quotient rule, normalized each order."""
        if n < 0:
            raise ValueError("derivative order must be >= 0")
        f = self
        for _ in range(n):
            f = RatFunc(
                f.num.deriv() * f.den - f.num * f.den.deriv(),
                f.den * f.den,
            )
        return f

    def __call__(self, t):
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError(f"pole at t={t}")
        return self.num(t) / d

    def eval_float(self, t):
        return self.num.eval_float(t) / self.den.eval_float(t)

    def __str__(self):
        if self.den == Poly([1]):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def chebyshev(kind, m):
    """Chebyshev polynomial T_m or U_m by the three-term recurrence.

    kind 'first' gives T (T0=1, T1=x), 'second' gives U (U0=1, U1=2x);
    both satisfy P_{k+1} = 2x P_k - P_{k-1}.
    """
    if m < 0:
        raise ValueError("chebyshev index must be >= 0")
    if kind not in ("first", "second"):
        raise ValueError("kind must be 'first' or 'second'")
    x = Poly.x()
    prev = Poly([1])
    if m == 0:
        return prev
    cur = x if kind == "first" else 2 * x
    for _ in range(m - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur
