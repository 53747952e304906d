"""End-to-end acceptance gate: every reference example, exactly.

Each test pins one family of published values: worked fixtures, random
property sweeps, symbolic identities, the shipped tables, and finally
the `verify-all` CLI command as the whole-repository gate.
"""

from fractions import Fraction

from congruent import cli, verify


F = Fraction


def _all_pass(checks):
    bad = [name for name, ok in checks if not ok]
    assert not bad, f"failed checks: {bad}"


def test_euclid_pair_worked_example():
    # (m, n) = (2, 1): derived triples, area quadruple (6, 34, 41, 7),
    # the identity 34^2 + 41^2 + 7^2 = 6(5^4 - 144) = 2886, connecting
    # EC points at y = 120, concordant solutions and the distance root
    _all_pass(verify.suite_triples())


def test_random_euclid_pairs_hold_all_identities():
    _all_pass(verify.suite_triples_random(count=200))


def test_vector_system_identities_to_order_four():
    # full symbolic battery: derivative identities for orders <= 4,
    # exact dot/cross ratios 2/3 and 1/3, circle residuals < 1e-9
    _all_pass(verify.suite_trinity(max_order=4, samples=32))


def test_smallest_triangle_for_157():
    _all_pass(verify.suite_conics_zagier())


def test_line_ellipse_intersection_family():
    _all_pass(verify.suite_conics_intersect())


def test_lattice_secondary_intersections():
    _all_pass(verify.suite_conics_lattice())


def test_twin_hyperbolas():
    _all_pass(verify.suite_conics_twin())


def test_oval_systems():
    _all_pass(verify.suite_cassini())


def test_tangent_chains():
    _all_pass(verify.suite_tangent())


def test_footprint_tables_and_worked_examples():
    _all_pass(verify.suite_footprints())


def test_walk_table_and_closed_forms():
    _all_pass(verify.suite_recurrence())


def test_sequence_families():
    _all_pass(verify.suite_sequences())


def test_square_hypotenuse_tree():
    _all_pass(verify.suite_fermat(depth=4))


def test_verify_all_cli_exits_zero(capsys):
    # keep the symbolic battery light here; the order-4 run is covered
    # above, and this checks the end-to-end command wiring and exit code
    assert cli.main(["verify-all", "--max-order", "2", "--samples", "16"]) == 0
    out = capsys.readouterr().out
    assert "verify-all" in out
