import json

import pytest

from turan import cli
from turan.core.decorators import EXIT_FAIL, EXIT_OK, EXIT_USAGE
from turan.core.errors import VerificationError
from turan.core.report import build_check, build_suite
from turan.modules.hypergraph import parse, parse_json, serialize


def _run(*argv):
    lines = []
    code = cli.run(list(argv), out=lines.append)
    return code, "\n".join(lines)


def _report(*argv):
    code, text = _run(*argv, "--json")
    return code, json.loads(text)


def test_lagrangian_json_report():
    code, report = _report("lagrangian", "K5_3")
    assert code == EXIT_OK
    assert report["passed"]
    assert report["result"]["value"] == pytest.approx(0.08, abs=1e-9)
    assert report["result"]["matches_expected"]
    manifest = report["manifest"]
    assert manifest["command"] == "lagrangian"
    assert manifest["seed"] == 0
    assert "wall_time" not in manifest


def test_json_report_is_byte_identical():
    first = _run("lagrangian", "F7", "--json", "--seed", "3")
    second = _run("lagrangian", "F7", "--json", "--seed", "3")
    assert first == second


def test_timing_adds_wall_time():
    code, report = _report("lagrangian", "K5_3", "--timing")
    assert code == EXIT_OK
    assert report["manifest"]["wall_time"] >= 0


def test_lagrangian_from_file(tmp_path, k53):
    path = tmp_path / "k5.txt"
    path.write_text(serialize(k53), encoding="utf-8")
    code, report = _report("lagrangian", "--file", str(path), "--mode", "exhaustive")
    assert code == EXIT_OK
    assert report["result"]["value"] == pytest.approx(0.08, abs=1e-9)
    assert report["result"]["mode"] == "exhaustive"


def test_quick_verify_all_report_is_byte_identical():
    first = _run("verify-all", "--quick", "--json", "--seed", "0")
    second = _run("verify-all", "--quick", "--json", "--seed", "0")
    assert first[0] == EXIT_OK
    assert first[1].encode("utf-8") == second[1].encode("utf-8")
    report = json.loads(first[1])
    assert [s["suite"] for s in report["result"]["suites"]] == ["closed-forms", "classification"]


def test_lagrangian_positional_file_with_exhaustive_flag(tmp_path, k53):
    path = tmp_path / "k5.txt"
    path.write_text(serialize(k53), encoding="utf-8")
    code, report = _report("lagrangian", str(path), "--exhaustive")
    assert code == EXIT_OK
    assert report["result"]["value"] == pytest.approx(0.08, abs=1e-9)
    assert report["result"]["mode"] == "exhaustive"
    assert report["manifest"]["parameters"]["file"] == str(path)
    assert report["manifest"]["parameters"]["name"] is None


def test_parametric_family():
    code, text = _run("lagrangian", "gen_K3", "--n", "5")
    assert code == EXIT_OK
    assert text.startswith("λ(gen_K3)")


@pytest.mark.parametrize(
    "argv",
    [
        ("lagrangian", "no_such_family"),
        ("lagrangian",),
        ("lagrangian", "K5_3", "--mode", "bogus"),
        ("classify",),
        ("classify", "--n", "4"),
        ("score", "--turan", "10", "--partition", "1,a|2|3|4|5"),
        ("score", "--turan", "10", "--partition", "1,2,3|4,5,6|7,8,9,10"),
        ("families", "emit", "K3"),
        ("lagrangian", "K5_3", "--mode", "symmetric", "--exhaustive"),
        ("lagrangian", "missing.json"),
        ("shift", "F7", "--policy", "sometimes"),
        ("shift",),
        ("score", "--turan", "10", "--partition", "0,1,2"),
        ("score", "--turan", "10", "--partition", "0,0,1,1,2,2,3,3,4,5"),
    ],
)
def test_usage_errors_exit_two(argv):
    code, _ = _run(*argv)
    assert code == EXIT_USAGE


def test_version_exits_zero():
    assert cli.run(["--version"], out=lambda _: None) == EXIT_OK


def test_families_list_and_emit(tmp_path, fano, k53):
    code, text = _run("families", "list")
    assert code == EXIT_OK
    assert "F7" in text and "K5_3" in text

    code, text = _run("families", "emit", "K5_3")
    assert code == EXIT_OK
    assert parse(text) == k53

    target = tmp_path / "f7.json"
    code, _ = _run("families", "emit", "F7", "--format", "json", "--out", str(target))
    assert code == EXIT_OK
    assert parse_json(target.read_text(encoding="utf-8")) == fano


def test_classify_writes_csv(tmp_path):
    target = tmp_path / "census5.csv"
    code, report = _report("classify", "--n", "5", "--cover-pairs", "--csv", str(target))
    assert code == EXIT_OK
    assert len(report["result"]["records"]) == 1
    assert report["result"]["checks"]["passed"]
    assert target.read_text(encoding="utf-8").count("\n") == 2


def test_shift_policies():
    code, report = _report("shift", "F7")
    assert code == EXIT_OK
    assert len(report["result"]["traces"]) == 1
    code, report = _report("shift", "gen_K3", "--n", "4", "--policy", "all")
    assert code == EXIT_OK
    assert report["result"]["policy"] == "all"


def test_shift_det_policy_with_trace():
    code, report = _report("shift", "gen_K3", "--n", "5", "--policy", "det", "--trace")
    assert code == EXIT_OK
    result = report["result"]
    assert result["policy"] == "deterministic"
    trace = result["traces"][0]
    assert trace["steps"]
    assert len(trace["states"]) == len(trace["steps"]) + 1
    assert trace["states"][0] == trace["initial"]
    assert trace["states"][-1] == trace["final"]

    code, text = _run("shift", "gen_K3", "--n", "5", "--policy", "det", "--trace")
    assert code == EXIT_OK
    assert text.startswith("trace 0:")
    assert text.count("→") == len(trace["steps"])


def test_shift_positional_file(tmp_path, fano):
    path = tmp_path / "f7.txt"
    path.write_text(serialize(fano), encoding="utf-8")
    code, report = _report("shift", str(path))
    assert code == EXIT_OK
    assert report["result"]["name"] == str(path)
    assert report["result"]["traces"][0]["steps"] == []
    assert "states" not in report["result"]["traces"][0]


def test_symmetrize_with_audit(tmp_path):
    log_path = tmp_path / "sym.json"
    code, report = _report("symmetrize", "--turan", "10", "--audit", "--json-log", str(log_path))
    assert code == EXIT_OK
    assert report["result"]["ratio"] == 1.0
    assert report["result"]["audit"]["passed"]
    saved = json.loads(log_path.read_text(encoding="utf-8"))
    assert len(saved["final"]["edge_list"]) == 80


def test_score_turan_partition():
    code, report = _report("score", "--turan", "10", "--partition", "1,2|3,4|5,6|7,8|9,10")
    assert code == EXIT_OK
    assert report["result"]["sigma"] == 0
    assert report["result"]["bad_vertices"] == []


def test_score_accepts_per_vertex_part_labels():
    labels = ",".join(str((v - 1) // 2) for v in range(1, 11))
    code, by_label = _report("score", "--turan", "10", "--partition", labels)
    assert code == EXIT_OK
    _, by_block = _report("score", "--turan", "10", "--partition", "1,2|3,4|5,6|7,8|9,10")
    assert by_label["result"] == by_block["result"]


def test_score_local_search_repairs_partition():
    code, report = _report("score", "--turan", "10", "--partition", "2|3,4|5,6|1,7,8|9,10", "--local-search")
    assert code == EXIT_OK
    assert report["result"]["sigma"] == 0


def test_failed_check_exits_one(monkeypatch):
    failing = [build_suite("closed-forms", [build_check("K5_3", False, expected=0.08, found=0.07)])]
    monkeypatch.setattr(cli, "run_verify_all", lambda plan: failing)
    code, report = _report("verify-all", "--quick")
    assert code == EXIT_FAIL
    assert not report["passed"]
    assert report["result"]["first_failure"]["name"] == "K5_3"


def test_verification_error_exits_one(monkeypatch):
    def boom(*args, **kwargs):
        raise VerificationError("symmetrize-progress", "stalled")

    monkeypatch.setattr(cli, "symmetrize", boom)
    code, _ = _run("symmetrize", "--turan", "10")
    assert code == EXIT_FAIL
