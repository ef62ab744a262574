"""Command line surface: output lines, exit codes, JSON mode."""

import json

import pytest

from wbk.cli import main

BRAID_BROKEN = {
    "kind": "solution",
    "order": 3,
    "map": [
        [[0, 0], [1, 1], [2, 2]],
        [[0, 1], [1, 2], [2, 0]],
        [[0, 2], [1, 0], [2, 1]],
    ],
}

EVENTUALLY_PERIODIC = {
    "kind": "solution",
    "order": 2,
    "map": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]],
}

INCOMPATIBLE_PAIR = {
    "kind": "dual_weak_brace",
    "order": 4,
    "add": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1]],
    "mul": [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]],
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def write_json(tmp_path, obj, name="in.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert out[-1] == "status: info"
    assert len(out) == 18
    assert any(line.startswith("z6_exotic  [skew_brace]") for line in out)


def test_validate_catalog_entry(capsys):
    code, out, _ = run(capsys, "validate", "--catalog", "z6_exotic")
    assert code == 0
    assert out == ["kind: skew_brace", "order: 6", "valid", "status: pass"]


def test_validate_spec_order(capsys):
    code, out, _ = run(capsys, "validate", "--catalog", "c3_sym3")
    assert code == 0
    assert "kind: strong_semilattice" in out and "order: 9" in out


def test_validate_violation_exit_1(capsys, tmp_path):
    path = write_json(tmp_path, INCOMPATIBLE_PAIR)
    code, out, _ = run(capsys, "validate", "--input", path)
    assert code == 1
    assert out == ["violation: compatibility witness=(1, 1, 1)", "status: fail"]


def test_usage_errors_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "validate")
    assert code == 2 and "exactly one of --input/--catalog" in err
    code, _, err = run(capsys, "validate", "--catalog", "a", "--input", "b")
    assert code == 2
    code, _, err = run(capsys, "validate", "--catalog", "nope")
    assert code == 2 and "no catalog entry" in err
    bad = tmp_path / "bad.json"
    bad.write_text("nonsense", encoding="utf-8")
    code, _, err = run(capsys, "validate", "--input", str(bad))
    assert code == 2 and "error:" in err


def test_unknown_command_exits_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["widget"])
    assert exc.value.code == 2


def test_braid_pass_and_fail(capsys, tmp_path):
    code, out, _ = run(capsys, "braid", "--catalog", "z6_exotic")
    assert code == 0 and out == ["216 triples checked", "status: pass"]
    path = write_json(tmp_path, BRAID_BROKEN)
    code, out, _ = run(capsys, "braid", "--input", path)
    assert code == 1 and out == ["BRAID-FAIL 0 0 1", "status: fail"]


def test_period_and_no_period(capsys, tmp_path):
    code, out, _ = run(capsys, "period", "--catalog", "z6_exotic")
    assert code == 0 and out == ["period 2", "status: pass"]
    path = write_json(tmp_path, EVENTUALLY_PERIODIC)
    code, out, _ = run(capsys, "period", "--input", path)
    assert code == 1 and out == ["NO-PERIOD tail=1 cycle=1", "status: fail"]


def test_solve_rows_and_limit(capsys):
    code, out, _ = run(capsys, "solve", "--catalog", "c2_trivial")
    assert code == 0
    assert out[0] == "order: 2" and "0 1 -> 1 0" in out
    code, out, _ = run(capsys, "solve", "--catalog", "c3_sym3", "--limit", "5")
    assert out[0] == "order: 9" and out[-2] == "truncated"
    assert len(out) == 8


def test_special_sets(capsys):
    code, out, _ = run(capsys, "soc", "--catalog", "z6_exotic")
    assert code == 0 and out[:2] == ["{0, 2, 4} I", "size: 3"]
    code, out, _ = run(capsys, "ann", "--catalog", "z6_exotic")
    assert out[:2] == ["{0} I", "size: 1"]
    code, out, _ = run(capsys, "fix", "--catalog", "z6_exotic")
    assert out[0].startswith("{0, 3}")
    code, out, _ = run(capsys, "zl", "--catalog", "z6_exotic")
    assert out[1] == "size: 2"


def test_ideals_listing(capsys):
    code, out, _ = run(capsys, "ideals", "--catalog", "z6_exotic", "--mode", "exhaustive")
    assert code == 0
    assert out[:2] == ["mode: exhaustive", "count: 3"]
    assert out[2:5] == ["{0} I", "{0, 2, 4} I", "{0, 1, 2, 3, 4, 5} I"]


def test_quotient_output(capsys):
    code, out, _ = run(capsys, "quotient", "--catalog", "z6_exotic", "--members", "0,2,4")
    assert code == 0
    assert out == [
        "order: 2",
        "projection: [0, 1, 0, 1, 0, 1]",
        "representatives: [0, 1]",
        "status: pass",
    ]


def test_quotient_rejects_non_ideal(capsys):
    code, out, _ = run(capsys, "quotient", "--catalog", "z6_exotic", "--members", "0,3")
    assert code == 1
    assert out == ["not an ideal: not_normal witness=(1, 3)", "status: fail"]
    code, _, err = run(capsys, "quotient", "--catalog", "z6_exotic", "--members", "0,9")
    assert code == 2 and "out of range" in err


def test_homs_listing(capsys):
    code, out, _ = run(
        capsys, "homs", "--catalog", "c3_trivial", "--catalog2", "sym3_trivial"
    )
    assert code == 0
    assert out[0] == "count: 3"
    assert "[0, 3, 4]" in out
    code, out, _ = run(
        capsys, "homs", "--catalog", "c3_trivial", "--catalog2", "sym3_trivial",
        "--limit", "1",
    )
    assert out[-2] == "truncated" and len(out) == 4
    code, _, err = run(capsys, "homs", "--catalog", "c2", "--catalog2", "c2")
    assert code == 2 and "skew_brace" in err


def test_iso_verdicts(capsys):
    code, out, _ = run(capsys, "iso", "--catalog", "z6_exotic", "--catalog2", "c6_trivial")
    assert code == 1 and out == ["not isomorphic", "status: fail"]
    code, out, _ = run(capsys, "iso", "--catalog", "z6_exotic", "--catalog2", "z6_exotic")
    assert code == 0 and out[0] == "isomorphic"
    assert out[1] == "eta: [0]"


def test_series_lines(capsys):
    code, out, _ = run(capsys, "series", "right", "--catalog", "z6_exotic")
    assert code == 0
    assert out[0] == "right: |S⁽¹⁾|=6 → |S⁽²⁾|=3 → |S⁽³⁾|=1 (terminated, index 2)"
    code, out, _ = run(capsys, "series", "ann", "--catalog", "z6_exotic")
    assert code == 0
    assert out == ["annihilator: |Ann₀|=1 (stalled, no index)", "status: info"]
    code, out, _ = run(capsys, "series", "socle", "--catalog", "c3_sym3")
    assert out[0] == "socle: |Soc₀|=2 (stalled, no index)"
    code, out, _ = run(
        capsys, "series", "gamma", "--catalog", "z6_exotic", "--members", "0,2,4"
    )
    assert out == ["gamma: |Γ₀|=3 (stalled, no index)", "status: info"]


def test_sandwich_both_ways(capsys):
    code, out, _ = run(capsys, "sandwich", "--catalog", "c2_c4_braces")
    assert code == 0
    assert out[0] == "annihilator series terminates at index 1"
    assert out[2] == "sandwich verified on 2 positions"
    code, out, _ = run(capsys, "sandwich", "--catalog", "z6_exotic")
    assert code == 1
    assert out[0] == "annihilator series stalls at size 1; no annihilator series exists"


def test_compose_decompose_commands(capsys):
    code, out, _ = run(capsys, "compose", "--catalog", "c3_sym3")
    assert code == 0
    assert out[:3] == ["order: 9", "components: 2", "idempotents: {0, 3}"]
    code, _, err = run(capsys, "compose", "--catalog", "z6_exotic")
    assert code == 2 and "strong_semilattice" in err
    code, out, _ = run(capsys, "decompose", "--catalog", "c3_sym3")
    assert out == [
        "components: 2",
        "component 0: order 3",
        "component 1: order 6",
        "hom 0>1: [0, 3, 4]",
        "status: pass",
    ]


def test_regularity_report(capsys):
    code, out, _ = run(capsys, "regularity", "--catalog", "z6_exotic")
    assert code == 0
    assert out[:2] == ["lambda bijective: 6/6", "rho bijective: 6/6"]


def test_classify_report(capsys):
    code, out, _ = run(capsys, "classify", "--catalog", "c3_sym3")
    assert code == 0
    assert out[0] == "order: 9" and out[1] == "idempotents: 2"
    assert "component 0 (order 3):" in out and "component 1 (order 6):" in out
    assert out[-1] == "status: info"


def test_json_format(capsys):
    code, out, _ = run(capsys, "braid", "--catalog", "z6_exotic", "--format", "json")
    assert code == 0
    obj = json.loads("\n".join(out))
    assert obj == {
        "command": "braid",
        "status": "pass",
        "lines": ["216 triples checked"],
        "witnesses": [],
    }
    code, out, _ = run(
        capsys, "iso", "--catalog", "z6_exotic", "--catalog2", "c6_trivial",
        "--format", "json",
    )
    assert code == 1
    assert json.loads("\n".join(out))["status"] == "fail"
