import json

import pytest

from latticehom.cli import JobConfig, main, parse_n_range, parse_rank_set


def run_cli(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_parsers():
    assert parse_rank_set("3,1,2") == (1, 2, 3)
    assert parse_rank_set("") == ()
    assert parse_n_range("4..10") == (4, 10)
    assert parse_n_range("7") == (7, 7)
    for bad in ("x", "5..3"):
        with pytest.raises(ValueError):
            parse_n_range(bad)
    with pytest.raises(ValueError):
        parse_rank_set("0,1")
    with pytest.raises(ValueError):
        JobConfig("betti", element_cap=0)


def test_boolean_stability_scan(capsys):
    code, out, _ = run_cli(capsys, "stability-scan", "--family", "boolean", "--S", "2,3", "--n", "4..10")
    rep = json.loads(out)
    assert code == 0
    assert rep["stable_at"] == 5 and rep["sharp"] is True and rep["verdict"] == "certified"


def test_betti_equals_basis_count(capsys):
    code, out, _ = run_cli(capsys, "betti", "--family", "partition", "--n", "4", "--S", "2")
    assert code == 0
    assert out.splitlines() == ["lattice,n,S,betti,basis_count", "Pi_4,4,2,6,6"]


def test_empty_rank_set_basis_is_trivial(capsys):
    code, out, _ = run_cli(capsys, "basis", "--family", "partition", "--n", "4", "--S", "")
    data = json.loads(out)
    assert code == 0 and data[0]["dimension"] == 1


def test_whitney_basis_export(capsys, tmp_path):
    target = tmp_path / "wh.json"
    code, _, _ = run_cli(capsys, "basis", "--family", "partition", "--n", "4", "--S", "1,2", "--whitney", "--out", str(target))
    data = json.loads(target.read_text())
    assert code == 0 and data[0]["dimension"] == 11


def test_decompose_and_character_tables(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--family", "partition", "--S", "2", "--n", "4")
    assert code == 0
    assert out.splitlines() == ["n,lambda,mult", "4,4,1", '4,"3,1",1', '4,"2,2",1']
    code, out, _ = run_cli(capsys, "character", "--family", "boolean", "--S", "1", "--n", "3", "--format", "json")
    values = {row["cycle_type"]: row["value"] for row in json.loads(out)}
    assert values == {"3": "-1", "2,1": "0", "1,1,1": "2"}


def test_matroid_family(capsys, tmp_path):
    f = tmp_path / "k3.json"
    f.write_text(json.dumps({"vertices": 3, "edges": [[1, 2], [1, 3], [2, 3]]}))
    code, out, _ = run_cli(capsys, "betti", "--family", "matroid", "--matroid", str(f), "--S", "1")
    assert code == 0 and out.splitlines()[1].endswith(",2,2")


def test_output_is_deterministic(capsys):
    args = ("decompose", "--family", "boolean", "--S", "1,3", "--n", "4..7", "--format", "json")
    assert run_cli(capsys, *args) == run_cli(capsys, *args)


def test_cache_directory(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("LATTICEHOM_CACHE", str(tmp_path))
    args = ("decompose", "--family", "boolean", "--S", "2", "--n", "5")
    first = run_cli(capsys, *args)
    assert len(list(tmp_path.iterdir())) == 1
    assert run_cli(capsys, *args) == first


def test_guard_violation_is_json_error(capsys):
    code, _, err = run_cli(capsys, "betti", "--family", "partition", "--n", "8", "--S", "2", "--element-cap", "100")
    assert code == 3 and json.loads(err)["error"] == "guard"


def test_bad_input_is_json_error(capsys):
    code, _, err = run_cli(capsys, "betti", "--family", "partition", "--n", "4", "--S", "5")
    assert code == 2 and json.loads(err)["error"] == "input"


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_all_lowered_guard_is_inconclusive(capsys):
    code, out, err = run_cli(capsys, "verify-all", "--only", "15", "--groupsum-cap", "5")
    summary = json.loads(out)
    assert code == 1 and summary["criteria"][0]["status"] == "inconclusive"
    assert "INCONCLUSIVE" in err


def test_verify_all_subset_passes(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--only", "13,15", "--threads", "2")
    summary = json.loads(out)
    assert code == 0 and [c["id"] for c in summary["criteria"]] == [13, 15]
