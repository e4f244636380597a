import json

import pytest

import kended.cli as cli
from kended.families import GraphFamilySpec, make_family
from kended.formats import emit_edge_list, emit_graph6
from kended.report import REPORT_SCHEMA


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def report_of(out):
    doc = json.loads(out)
    jsonschema = pytest.importorskip("jsonschema")
    jsonschema.validate(doc, REPORT_SCHEMA)
    return doc


def test_analyze_family_kmm(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--family", "kmm 3 1", "--set", "B")
    assert code == 0
    doc = report_of(out)
    res = doc["results"]
    assert res["alpha"] == 4
    assert res["kappa"] == 3
    assert res["threshold_k"] == 2
    assert res["graph_connected"] is True
    assert doc["inputs"]["set"] == [3, 4, 5, 6]


def test_analyze_singleton_set_reports_infinity(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--family", "cycle 5", "--set", "2")
    assert code == 0
    res = report_of(out)["results"]
    assert res["kappa"] == "infinity"
    assert res["threshold_k"] == 2


def test_analyze_c5_threshold(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--family", "cycle 5", "--set", "all")
    assert code == 0
    res = report_of(out)["results"]
    assert res["alpha"] == 2 and res["kappa"] == 2
    assert res["threshold_k"] == 2


def test_analyze_graph_file_edgelist(tmp_path, capsys):
    graph, _ = make_family(GraphFamilySpec("cycle", (4,)))
    f = tmp_path / "c4.txt"
    f.write_text(emit_edge_list(graph))
    code, out, _ = run_cli(
        capsys, "analyze", "--graph", str(f), "--format", "edgelist", "--set", "all"
    )
    assert code == 0
    assert report_of(out)["results"]["alpha"] == 2


def test_construct_petersen_hamiltonian_trace(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "petersen", "--set", "all", "--k", "2")
    assert code == 0
    res = report_of(out)["results"]
    assert res["outcome"] == "covering"
    assert res["leaf_count"] <= 2
    assert res["covers_set"] is True
    assert len(res["trace"]["base_path"]) == 10
    assert res["trace"]["attachments"] == []


def test_construct_sharpness_cell_residual(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "kmm 2 2", "--set", "B", "--k", "2")
    assert code == 0
    res = report_of(out)["results"]
    assert res["outcome"] in ("covering", "residual-bound")
    if res["outcome"] == "residual-bound":
        assert res["residual_alpha"] <= res["bound"] == 1


def test_construct_empty_set_trivially_covered(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "cycle 4", "--set", "none", "--k", "2")
    assert code == 0
    res = report_of(out)["results"]
    assert res["outcome"] == "covering"
    assert res["covers_set"] is True


def test_graph6_stdin(capsys, monkeypatch):
    import io

    graph, _ = make_family(GraphFamilySpec("cycle", (5,)))
    monkeypatch.setattr("sys.stdin", io.StringIO(emit_graph6(graph) + "\n"))
    code, out, _ = run_cli(capsys, "analyze", "--graph", "-", "--set", "all")
    assert code == 0
    assert report_of(out)["results"]["alpha"] == 2


def test_usage_errors_exit_2(capsys, tmp_path):
    code, _, err = run_cli(capsys, "analyze", "--family", "nosuch 1")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "analyze", "--family", "cycle 5", "--set", "9")
    assert code == 2
    code, _, err = run_cli(capsys, "analyze")
    assert code == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("~~~\n")
    code, _, err = run_cli(capsys, "analyze", "--graph", str(bad))
    assert code == 2
    code, _, err = run_cli(capsys, "construct", "--family", "kmm 2 1", "--set", "B", "--k", "1")
    assert code == 2
    plan = tmp_path / "bad.plan"
    plan.write_text("mode = nosuch\n")
    code, _, err = run_cli(capsys, "verify", "--plan", str(plan))
    assert code == 2


def test_set_b_requires_family(capsys):
    code, _, err = run_cli(capsys, "analyze", "--family", "cycle 5", "--set", "B")
    assert code == 2


def test_verify_small_plan_exit_zero(tmp_path, capsys):
    plan = tmp_path / "small.plan"
    plan.write_text("mode = exhaustive\nn = 3\n")
    code, out, _ = run_cli(capsys, "verify", "--plan", str(plan))
    assert code == 0
    res = report_of(out)["results"]
    assert res["zero_counterexamples"] is True
    assert res["graphs_evaluated"] == 6


def test_verify_writes_out_file(tmp_path, capsys):
    plan = tmp_path / "small.plan"
    plan.write_text("mode = exhaustive\nn = 2\n")
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify", "--plan", str(plan), "--out", str(target))
    assert code == 0
    assert out == ""
    assert report_of(target.read_text())["results"]["zero_counterexamples"] is True


def test_sharpness_small_grid_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "sharpness", "--m-range", "1..2", "--k-range", "1..2")
    assert code == 0
    res = report_of(out)["results"]
    assert res["all_match"] is True
    assert len(res["cells"]) == 4


def test_sharpness_k3_mismatch_exits_one(capsys):
    # the exact minimum branch count is 1, not k - 1, for k >= 3
    code, out, _ = run_cli(capsys, "sharpness", "--m-range", "1..1", "--k-range", "3..3")
    assert code == 1
    res = report_of(out)["results"]
    assert res["all_match"] is False
    assert res["cells"][0]["min_branch"] == 1
    assert res["cells"][0]["expected"]["min_branch"] == 2


def test_sharpness_skips_cells_above_cap(capsys):
    code, out, _ = run_cli(capsys, "sharpness", "--m-range", "4..4", "--k-range", "1..3")
    res = report_of(out)["results"]
    assert [4, 3] in res["skipped_cells"]


def test_byte_stable_reports_without_timing(capsys, tmp_path):
    args = ("analyze", "--family", "kmm 2 2", "--set", "B", "--no-timing")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    doc = json.loads(first)
    assert doc["timing"] is None

    plan = tmp_path / "p.plan"
    plan.write_text("mode = random\nn = 5\np = 0.5\ncount = 10\nseed = 3\ns_policy = s=v\n")
    _, first, _ = run_cli(capsys, "verify", "--plan", str(plan), "--no-timing")
    _, second, _ = run_cli(capsys, "verify", "--plan", str(plan), "--no-timing")
    assert first == second


def test_seed_override_changes_random_plan(tmp_path, capsys):
    plan = tmp_path / "p.plan"
    plan.write_text("mode = random\nn = 5\np = 0.5\ncount = 10\nseed = 3\ns_policy = s=v\n")
    _, base, _ = run_cli(capsys, "verify", "--plan", str(plan), "--no-timing")
    _, reseeded, _ = run_cli(capsys, "verify", "--plan", str(plan), "--seed", "4", "--no-timing")
    assert json.loads(base)["inputs"]["plan"]["seed"] == 3
    assert json.loads(reseeded)["inputs"]["plan"]["seed"] == 4
