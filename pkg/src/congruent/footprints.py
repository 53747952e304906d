"""Footprint equations: (m, n) witnesses for prime-related congruent numbers.

For N prime (or twice a prime) a pair of integers (m, n) pins down a
rational right triangle (p/q, 2Nq/p, sqrt(p^4+4N^2q^4)/(pq)) of area N
through one of five closed-form families selected by the congruence
class of N mod 8.  The p and q values may individually be irrational
(multiples of sqrt(N) or sqrt(2)); the module works entirely with p^2
and q^2 so the triangle sides emerge from exact rational square roots.
A table of solutions for every qualifying N below 1000 ships with the
package and is verified row by row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .exact import is_probable_prime, rat_sqrt
from .triples import RatTriangle

__all__ = [
    "FootprintRow",
    "PQ",
    "CLASSES",
    "classify",
    "footprint_pq",
    "footprint_triangle",
    "load_rows",
    "verify_tables",
]

CLASSES = ("T0a", "T0b", "TI", "TII", "TIII", "TIV")


@dataclass(frozen=True)
class FootprintRow:
    n: int
    m: int
    k: int  # the table's second solution column (named n there)
    cls: str

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise ValueError(f"unknown footprint class {self.cls!r}")


@dataclass(frozen=True)
class PQ:
    """p and q squared, plus the exact roots when they are rational."""

    p_sq: Fraction
    q_sq: Fraction

    @property
    def p(self):
        return rat_sqrt(self.p_sq)

    @property
    def q(self):
        return rat_sqrt(self.q_sq)


def classify(n):
    """The footprint family of N: 'T0', 'TI', 'TII', 'TIII' or 'TIV'.

    N must be a prime congruent to 1, 5 or 7 mod 8, or twice a prime
    congruent to 7 or 3 mod 8.  The 'T0' family splits into T0a/T0b per
    row, depending on whether N = m^4 + 6m^2n^2 + n^4 for that row.
    """
    if n >= 2 and is_probable_prime(n):
        r = n % 8
        if r == 1:
            return "T0"
        if r == 5:
            return "TI"
        if r == 7:
            return "TII"
        raise ValueError(f"prime {n} = 3 mod 8 is not congruent")
    if n % 2 == 0 and is_probable_prime(n // 2):
        r = (n // 2) % 8
        if r == 7:
            return "TIII"
        if r == 3:
            return "TIV"
        raise ValueError(f"{n} = 2p with p = {r} mod 8 is outside the families")
    raise ValueError(f"{n} is neither prime nor twice a prime")


def footprint_pq(row):
    """The squared (p, q) for a table row, by its class formula."""
    n, m, k = row.n, row.m, row.k
    if row.cls == "T0a":
        if n != m**4 + 6 * m**2 * k**2 + k**4:
            raise ValueError("T0a requires N = m^4 + 6 m^2 n^2 + n^4")
        p = Fraction(n * (m**2 - k**2))
        q = Fraction(2 * m * k * (m**2 + k**2))
        return PQ(p**2, q**2)
    if row.cls == "T0b":
        p_sq = Fraction((m**2 + k**2) ** 2 * n * ((2 * m * k) ** 2 - (m**2 - k**2) ** 2), 16)
        q = Fraction(m * k * (m**2 - k**2), 2)
        return PQ(p_sq, q**2)
    if row.cls == "TI":
        p_sq = Fraction((m**2 * k**2 * n) ** 2) - Fraction((m**2 * n - k**2) ** 4, 16)
        q = Fraction(m * k * (m**2 * n - k**2), 2)
        return PQ(p_sq, q**2)
    if row.cls == "TII":
        p_sq = Fraction((m**2 + k**2) ** 2 * n * ((2 * m * k) ** 2 - (m**2 - k**2) ** 2))
        q = Fraction(2 * m * k * (m**2 - k**2))
        return PQ(p_sq, q**2)
    if row.cls == "TIII":
        p_sq = Fraction(
            (m**2 + 2 * k**2) ** 2 * n * (8 * m**2 * k**2 - (m**2 - 2 * k**2) ** 2)
        )
        q_sq = Fraction(8 * m**2 * k**2 * (m**2 - 2 * k**2) ** 2)
        return PQ(p_sq, q_sq)
    # TIV
    p_sq = (
        Fraction((m**2 - k**2 - 2 * m * k) ** 2)
        * Fraction(n, 2)
        * ((m - k) ** 2 + 2 * m**2)
        * ((m + k) ** 2 + 2 * k**2)
    )
    q = Fraction((m**2 - k**2 + 2 * m * k) * (m**2 + k**2))
    return PQ(p_sq, q**2)


def footprint_triangle(row):
    """The positive rational right triangle of area N for a table row."""
    pq = footprint_pq(row)
    if pq.p_sq <= 0 or pq.q_sq <= 0:
        raise ValueError("row yields a nonpositive p^2 or q^2")
    a_sq = pq.p_sq / pq.q_sq
    b_sq = 4 * row.n**2 * pq.q_sq / pq.p_sq
    a = rat_sqrt(a_sq)
    b = rat_sqrt(b_sq)
    c = rat_sqrt(a_sq + b_sq)
    if a is None or b is None or c is None:
        raise ValueError("row does not rationalize: a side square is not a square")
    tri = RatTriangle(a, b, c)
    if tri.area != row.n:
        raise AssertionError("footprint triangle area mismatch")
    return tri


def load_rows(table=None):
    """All shipped table rows, optionally filtered by family.

    table may be '0' (both T0 subclasses), 'I', 'II', 'III', 'IV', or a
    full class name like 'T0a'.
    """
    text = resources.files("congruent.data").joinpath("footprint_tables.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n_s, m_s, k_s, cls = line.split()
        rows.append(FootprintRow(int(n_s), int(m_s), int(k_s), cls))
    if table is not None:
        if table == "0":
            wanted = {"T0a", "T0b"}
        elif table in ("I", "II", "III", "IV"):
            wanted = {"T" + table}
        elif table in CLASSES:
            wanted = {table}
        else:
            raise ValueError(f"unknown table {table!r}")
        rows = [r for r in rows if r.cls in wanted]
    return rows


def verify_tables(table=None):
    """Reconstruct every row's triangle; returns per-row reports.

    Each report carries the row, a validity flag and either the triangle
    or the failure reason; class consistency with classify() is included.
    """
    reports = []
    for row in load_rows(table):
        report = {"row": row, "ok": True, "triangle": None, "error": None}
        try:
            family = classify(row.n)
            expected = {"T0": {"T0a", "T0b"}}.get(family, {family})
            if row.cls not in expected:
                raise ValueError(
                    f"row class {row.cls} inconsistent with N = {row.n} ({family})"
                )
            report["triangle"] = footprint_triangle(row)
        except (ValueError, AssertionError) as exc:
            report["ok"] = False
            report["error"] = str(exc)
        reports.append(report)
    return reports
