"""Pythagorean triples with square hypotenuse and square leg sum.

Fermat asked for the smallest right triangle whose hypotenuse and sum of
legs are both perfect squares.  Writing a solution as a fraction x = p/q
(p, q odd and coprime) with triple (pq, -(p^2-q^2)/2, (p^2+q^2)/2), each
solution yields up to two child fractions through an explicit quadratic
construction, so the solutions form an infinite binary tree rooted at
x = 1 (the trivial 1^2 + 0^2 = 1^2).  Nodes where both legs are positive
are genuine sum-of-legs solutions; nodes with a negative leg solve the
difference variant.  Enumerating the tree locates Fermat's 13-digit
solution and its 45-digit successor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import is_square, isqrt

__all__ = [
    "FermatNode",
    "FermatTree",
    "node_from_fraction",
    "children",
    "enumerate_tree",
]


@dataclass(frozen=True)
class FermatNode:
    """One solution: the defining fraction and its signed integer triple."""

    x: Fraction
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a**2 + self.b**2 != self.c**2:
            raise ValueError("node triple is not Pythagorean")
        if is_square(self.a + self.b) is None or is_square(self.c) is None:
            raise ValueError("node violates the square invariants")

    @property
    def kind(self):
        """'sum' for all-positive legs, 'root' for the trivial node,
        'diff' when one leg is negative (|a|+|b| sums to a non-square)."""
        if self.b == 0:
            return "root"
        return "sum" if self.a > 0 and self.b > 0 else "diff"

    @property
    def sum_root(self):
        return isqrt(self.a + self.b)

    @property
    def hyp_root(self):
        return isqrt(self.c)


@dataclass(frozen=True)
class FermatTree:
    """Nodes in discovery order with the depth each was found at."""

    depth: int
    nodes: tuple  # of (depth, FermatNode)

    def by_kind(self, kind):
        return [n for _, n in self.nodes if n.kind == kind]

    def smallest_sum(self):
        """The nontrivial all-positive node with the smallest hypotenuse."""
        candidates = self.by_kind("sum")
        if not candidates:
            return None
        return min(candidates, key=lambda n: n.c)


def node_from_fraction(x):
    """Build and validate the node for a fraction p/q with p, q odd."""
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    if p % 2 == 0 or q % 2 == 0:
        raise ValueError("p and q must both be odd")
    a = p * q
    b = -(p**2 - q**2) // 2
    c = (p**2 + q**2) // 2
    return FermatNode(x, a, b, c)


def children(node):
    """The 0-2 child fractions of a node.

    With n = a - b and m = sqrt(a+b) sqrt(c) (integers by the node
    invariants), the children are ((2mn)^2 + n^4 ± 4mn·sqrt(8m^4+n^4))
    over (16m^4 + n^4); the value 1 (the root) is excluded.  The radical
    8m^4 + n^4 has been a perfect square at every node ever enumerated;
    a non-square here is treated as a hard structural failure.
    """
    n = node.a - node.b
    m = node.sum_root * node.hyp_root
    d = is_square(8 * m**4 + n**4)
    if d is None:
        raise ArithmeticError("8m^4 + n^4 is not a perfect square on-tree")
    den = 16 * m**4 + n**4
    out = []
    for sign in (1, -1):
        num = (2 * m * n) ** 2 + n**4 + sign * 4 * m * n * d
        x = Fraction(num, den)
        if x != 1:
            out.append(x)
    return out


def enumerate_tree(depth):
    """Breadth-first expansion of the solution tree to a given depth.

    Fractions are deduplicated; each node is validated on construction.
    Node count doubles per level and the integers roughly square, so
    depths beyond ~8 get slow.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    root = node_from_fraction(Fraction(1))
    seen = {root.x}
    nodes = [(0, root)]
    frontier = [root]
    for level in range(1, depth + 1):
        nxt = []
        for node in frontier:
            for x in children(node):
                if x in seen:
                    continue
                seen.add(x)
                child = node_from_fraction(x)
                nodes.append((level, child))
                nxt.append(child)
        frontier = nxt
    return FermatTree(depth, tuple(nodes))
