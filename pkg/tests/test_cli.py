import json

import pytest

from congruent import cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_triples_text(capsys):
    code, out, _ = run(capsys, ["triples", "--m", "2", "--n", "1"])
    assert code == 0
    assert "== triples ==" in out
    assert "353/30" in out


def test_triples_json_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, ["triples", "--m", "2", "--n", "1", "--json"])
    assert code == 0
    env = json.loads(out)
    assert env["command"] == "triples"
    assert env["inputs"] == {"m": 2, "n": 1}
    assert all(c["pass"] for c in env["checks"])


def test_json_env_default(capsys, monkeypatch):
    monkeypatch.setenv("CONGRUENT_FORMAT", "json")
    code, out, _ = run(capsys, ["triples", "--m", "2", "--n", "1"])
    assert code == 0
    json.loads(out)  # must be valid JSON without the flag


def test_big_integers_serialized_as_strings(capsys):
    code, out, _ = run(capsys, ["fermat", "--depth", "2", "--find-smallest", "--json"])
    assert code == 0
    env = json.loads(out)
    blob = json.dumps(env)
    assert "4565486027761" in blob


def test_conics_intersect(capsys):
    code, out, _ = run(capsys, ["conics", "intersect", "--t", "3", "--json"])
    assert code == 0
    env = json.loads(out)
    assert env["command"] == "conics intersect"
    assert all(c["pass"] for c in env["checks"])


def test_cassini_two(capsys):
    code, out, _ = run(capsys, ["cassini", "two", "--n", "29", "--f1", "1", "--f2", "-13", "--json"])
    assert code == 0
    env = json.loads(out)
    assert all(c["pass"] for c in env["checks"])


def test_cassini_emit_curve(capsys):
    code, out, _ = run(
        capsys,
        ["cassini", "two", "--n", "29", "--f1", "1", "--f2", "-13", "--emit-curve", "5", "--json"],
    )
    assert code == 0
    env = json.loads(out)
    pts = env["results"]["curve_points_approx"]
    assert len(pts) == 5


def test_recur_walk(capsys):
    code, out, _ = run(
        capsys,
        ["recur", "walk", "--start-m", "2", "--start-n", "1", "--path", "abba", "--json"],
    )
    assert code == 0
    env = json.loads(out)
    assert all(c["pass"] for c in env["checks"])


def test_footprints_triangle(capsys):
    code, out, _ = run(
        capsys,
        ["footprints", "triangle", "--n", "14", "--m", "2", "--k", "1", "--cls", "TIII", "--json"],
    )
    assert code == 0
    env = json.loads(out)
    assert all(c["pass"] for c in env["checks"])


def test_seq_brahmagupta(capsys):
    code, out, _ = run(capsys, ["seq", "brahmagupta", "--k", "3", "--json"])
    assert code == 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["triples", "--m", "2"])  # missing required --n
    assert exc.value.code == 2


def test_unknown_command_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, ["triples", "--m", "1", "--n", "2"])
    assert code == 3
    assert "error:" in err


def test_verify_all_fast(capsys):
    code, out, _ = run(capsys, ["verify-all", "--max-order", "1", "--samples", "8", "--json"])
    assert code == 0
    env = json.loads(out)
    assert all(c["pass"] for c in env["checks"])
