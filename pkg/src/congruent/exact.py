"""Exact integer and rational kernels.

Python ints are already arbitrary precision and fractions.Fraction is an
exact, eagerly normalized rational, so the scalar types here are thin:
``Rat`` is an alias for Fraction.  What this module adds are the
number-theoretic kernels everything else leans on: integer square root,
perfect-square tests, deterministic factorization with an effort budget,
and signed squarefree parts.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

Rat = Fraction

__all__ = [
    "Rat",
    "FactorBudgetExceeded",
    "isqrt",
    "is_square",
    "rat_sqrt",
    "is_probable_prime",
    "factorize",
    "squarefree_part",
    "parse_rat",
    "format_rat",
]

TRIAL_DIVISION_BOUND = 10**6


class FactorBudgetExceeded(Exception):
    """Raised when factorization gives up before fully splitting its input."""

    def __init__(self, n, remaining):
        super().__init__(f"factorization budget exhausted on {n}; unfactored part {remaining}")
        self.n = n
        self.remaining = remaining


def isqrt(n):
    """Floor of the square root of a nonnegative integer."""
    if n < 0:
        raise ValueError("isqrt of negative integer")
    return math.isqrt(n)


def is_square(n):
    """Return the exact nonnegative root if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def rat_sqrt(r):
    """Exact nonnegative square root of a rational, or None.

    Present iff numerator and denominator (in lowest terms) are both
    perfect squares.
    """
    r = Fraction(r)
    rn = is_square(r.numerator)
    if rn is None:
        return None
    rd = is_square(r.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


def is_probable_prime(n):
    """Miller-Rabin test; deterministic below 3.3e24, else 40 fixed rounds."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 3317044064679887385961981:
        bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    else:
        rng = random.Random(0xC0FFEE ^ n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(40))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n, budget, seed):
    """One Pollard rho run with Brent cycle detection; returns a factor or None."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    iterations = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
            iterations += min(m, r - k + m)
            if iterations > budget:
                return None
        r *= 2
    if g == n:
        # backtrack one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def factorize(n, budget=10**7):
    """Prime factorization of |n| as a sorted list with multiplicity.

    Trial division to 10**6, then Pollard rho (Brent) with a fixed seed so
    runs are deterministic.  ``budget`` caps rho iterations; exceeding it
    raises FactorBudgetExceeded rather than hanging on hard composites.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factorize 0")
    factors = []
    for p in (2, 3, 5):
        while n % p == 0:
            factors.append(p)
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < TRIAL_DIVISION_BOUND:
        while n % p == 0:
            factors.append(p)
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    if n == 1:
        return sorted(factors)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m < TRIAL_DIVISION_BOUND**2 or is_probable_prime(m):
            factors.append(m)
            continue
        r = is_square(m)
        if r is not None:
            stack.extend((r, r))
            continue
        d = None
        for attempt in range(8):
            d = _brent_rho(m, budget, seed=0x5EED + attempt)
            if d is not None and d != m:
                break
            d = None
        if d is None:
            raise FactorBudgetExceeded(n, m)
        stack.extend((d, m // d))
    return sorted(factors)


def squarefree_part(n, budget=10**7):
    """The squarefree d with n = d*s**2; sign of d follows the sign of n."""
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    sign = -1 if n < 0 else 1
    d = 1
    prev = None
    odd = False
    for p in factorize(n, budget=budget):
        if p == prev:
            odd = not odd
        else:
            if odd:
                d *= prev
            prev, odd = p, True
    if odd:
        d *= prev
    return sign * d


def parse_rat(s):
    """Parse 'p/q' or 'p' into an exact Fraction."""
    return Fraction(s.strip())


def format_rat(r):
    """Exact 'p/q' (or 'p') string for a rational; never a float."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"
