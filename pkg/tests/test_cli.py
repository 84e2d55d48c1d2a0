import json

import pytest

from posetcat.catalog import chain, pseudocircle
from posetcat.cli import main
from posetcat.maps import identity


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cat_pseudocircle(capsys):
    code, out, _ = run(capsys, "invariant", "cat", "--space", "catalog:pseudocircle")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 1 and doc["verified"]
    assert len(doc["certificate"]["parts"]) == 2 and doc["schema_version"] == 1


def test_cat_pseudocircle_squared(capsys):
    code, out, _ = run(capsys, "invariant", "cat", "--space", "catalog:pseudocircle-squared",
                       "--quiet")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 3 and "certificate" not in doc


def test_dist_from_files(capsys, tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps(identity(pseudocircle()).to_json()))
    code, out, _ = run(capsys, "invariant", "dist", "--map", str(p), "--map", str(p))
    assert code == 0 and json.loads(out)["value"] == 0


def test_space_file(capsys, tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps(chain(3).to_json()))
    code, out, _ = run(capsys, "invariant", "tc", "--space", str(p))
    assert code == 0 and json.loads(out)["value"] == 0


def test_liftcat_wg_flag(capsys):
    code, out, _ = run(capsys, "invariant", "liftcat", "--wg", "--map", "catalog:id:chain-2",
                       "--map", "catalog:const:chain-2")
    assert code == 0 and json.loads(out)["invariant"] == "liftcat-wg"


def test_homotopic(capsys):
    code, out, _ = run(capsys, "homotopic", "--map", "catalog:id:pseudocircle",
                       "--map", "catalog:const:pseudocircle")
    assert code == 0 and json.loads(out)["status"] == "not-homotopic"
    code, out, _ = run(capsys, "homotopic", "--map", "catalog:id:chain-2",
                       "--map", "catalog:const:chain-2")
    doc = json.loads(out)
    assert doc["status"] == "homotopic" and len(doc["fence"]) == 2 and doc["verified"]


def test_budget_exit_code(capsys, tmp_path):
    code, out, _ = run(capsys, "invariant", "cat", "--space", "catalog:pseudocircle-squared",
                       "--budget", "10")
    assert code == 2 and json.loads(out)["status"] == "budget-exceeded"
    from posetcat.maps import constant, diagonal
    d = diagonal(pseudocircle())
    p = tmp_path / "c.json"
    p.write_text(json.dumps(constant(d.domain, d.codomain).to_json()))
    code, _, _ = run(capsys, "homotopic", "--map", str(p),
                     "--map", "catalog:diagonal:pseudocircle", "--budget", "2")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["invariant", "cat", "--space", "catalog:discrete-2"],
    ["invariant", "cat", "--space", "catalog:nowhere"],
    ["invariant", "dist", "--map", "catalog:id:chain-2", "--map", "catalog:id:chain-3"],
    ["invariant", "secat"],
    ["invariant", "cat", "--space", "/nonexistent.json"],
])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_malformed_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "invariant", "tc", "--space", str(p))[0] == 1


def test_suite_empty_subset(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"properties": []}))
    code, out, _ = run(capsys, "suite", str(cfg))
    assert code == 0 and json.loads(out)["properties"] == []


def test_suite_reports_failure(capsys, tmp_path):
    from posetcat.harness.suite import encode_instance
    S = pseudocircle()
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "instances": 0, "properties": ["cat-of-products"], "unfiltered": ["cat-of-products"],
        "inject": [{"property": "cat-of-products", "instance": encode_instance({"X": S, "Y": S})}]}))
    out_file = tmp_path / "report.json"
    code, _, _ = run(capsys, "suite", str(cfg), "--out", str(out_file), "--table")
    assert code == 3 and not json.loads(out_file.read_text())["ok"]


def test_stable_output(capsys):
    a = run(capsys, "invariant", "tc", "--space", "catalog:pseudocircle")[1]
    b = run(capsys, "invariant", "tc", "--space", "catalog:pseudocircle")[1]
    assert a == b
