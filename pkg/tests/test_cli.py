import json

import pytest
from click.testing import CliRunner

from conftest import sample
from quiverphi.cli import cli

FIX2 = sample("fix2.qa")
FIX5 = sample("fix5.qa")


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.delenv("QA_REGISTRY", raising=False)
    return CliRunner()


def first_line(result):
    return result.output.splitlines()[0]


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "0.3.0" in result.output


def test_phi_of_a_sum(runner):
    result = runner.invoke(cli, ["phi", "--algebra", FIX2, "--module", "S1+S2"])
    assert result.exit_code == 0
    assert first_line(result) == "1"


def test_json_output_is_deterministic(runner):
    args = ["phi", "--algebra", FIX2, "--module", "S1", "--format", "json"]
    one, two = runner.invoke(cli, args), runner.invoke(cli, args)
    assert one.exit_code == 0
    assert one.output == two.output
    doc = json.loads(one.output)
    assert doc["command"] == "phi"
    assert doc["results"][0] == {"item": "S1", "value": "1", "note": "ranks 1,0,0"}


def test_uncertified_phi_exits_with_three(runner, tmp_path):
    a3 = tmp_path / "a3.qa"
    a3.write_text("algebra A3 over Q {\n    vertices 1 2 3;\n    arrows a:1->2, b:2->3;\n    relations a*b;\n}\n")
    args = ["phi", "--algebra", str(a3), "--module", "S1"]
    assert first_line(runner.invoke(cli, args)) == "2"
    result = runner.invoke(cli, args + ["--closure-cutoff", "1", "--horizon", "6"])
    assert result.exit_code == 3
    assert "unknown(>=2)" in result.output.splitlines()


@pytest.mark.parametrize("command,module,expected", [("pd", "S1", "1"), ("id", "S2", "1"), ("pd", "P1", "0")])
def test_dimensions(runner, command, module, expected):
    result = runner.invoke(cli, [command, "--algebra", FIX2, "--module", module])
    assert result.exit_code == 0
    assert first_line(result) == expected


def test_check_lists_declarations(runner):
    result = runner.invoke(cli, ["check", FIX5])
    assert result.exit_code == 0
    assert "FIX5" in result.output
    assert "dim 8" in result.output


def test_basis_and_projectives(runner):
    result = runner.invoke(cli, ["basis", "--algebra", FIX2])
    assert result.exit_code == 0
    assert "e_1" in result.output
    result = runner.invoke(cli, ["projectives", "--algebra", FIX2])
    assert result.exit_code == 0
    assert "gldim" in result.output


def test_syzygy_table(runner):
    result = runner.invoke(cli, ["syzygy", "--algebra", FIX2, "--module", "S12", "-k", "2"])
    assert result.exit_code == 0
    assert "Omega^2" in result.output


def test_example_fix5(runner):
    result = runner.invoke(cli, ["example", "fix5"])
    assert result.exit_code == 0
    assert "lemma3.1: PASS" in result.output
    assert "prop3.5: PASS" in result.output


def test_verify_and_hypotheses(runner):
    result = runner.invoke(cli, ["verify", "lemma3.1", "--example", "fix5"])
    assert result.exit_code == 0
    result = runner.invoke(cli, ["hypotheses", "--algebra", FIX5])
    assert result.exit_code == 0
    assert "H4: holds" in result.output


def test_glue_summary(runner):
    result = runner.invoke(cli, ["glue", "--algebra", FIX5])
    assert result.exit_code == 0
    assert "connector" in result.output
    emitted = runner.invoke(cli, ["glue", "--algebra", FIX5, "--emit"])
    assert emitted.output.startswith("algebra FIX5 over Q {")


def test_opposite_prints_a_document(runner):
    result = runner.invoke(cli, ["opposite", "--algebra", FIX2])
    assert result.exit_code == 0
    assert "arrows a:2->1;" in result.output


@pytest.mark.parametrize("args", [
    ["phi", "--module", "S1"],
    ["phi", "--algebra", FIX2, "--module", "S9"],
    ["hypotheses", "--algebra", FIX2],
    ["pd", "--algebra", FIX2, "--module", "S1", "--cutoff", "0"],
])
def test_usage_errors_exit_with_two(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert "error:" in result.output


def test_malformed_document(runner, tmp_path):
    bad = tmp_path / "bad.qa"
    bad.write_text("algebra A over Q {\n    arrows a 1->2;\n}\n")
    result = runner.invoke(cli, ["check", str(bad)])
    assert result.exit_code == 2
    assert "2:" in result.output


def test_registry_save_and_load(runner, tmp_path):
    path = str(tmp_path / "reg.json")
    saved = runner.invoke(cli, ["registry", "save", "--algebra", FIX2, "--registry", path])
    assert saved.exit_code == 0
    loaded = runner.invoke(cli, ["registry", "load", "--algebra", FIX2, "--registry", path])
    assert loaded.exit_code == 0
    assert "#0" in loaded.output
    wrong = runner.invoke(cli, ["registry", "load", "--algebra", FIX5, "--registry", path])
    assert wrong.exit_code == 2


def test_html_report(runner, tmp_path):
    out = tmp_path / "r.html"
    result = runner.invoke(cli, ["verify", "lemma3.1", "--example", "fix5", "--format", "html", "--out", str(out)])
    assert result.exit_code == 0
    assert out.exists()
    assert "lemma3.1" in out.read_text(encoding="utf-8")


def test_report_from_json(runner, tmp_path):
    data = runner.invoke(cli, ["hypotheses", "--example", "fix5", "--format", "json"])
    src = tmp_path / "report.json"
    src.write_text(data.output)
    out = tmp_path / "html" / "report.html"
    result = runner.invoke(cli, ["report", str(src), "--out", str(out)])
    assert result.exit_code == 0
    assert "hypotheses" in out.read_text(encoding="utf-8")
    broken = tmp_path / "broken.json"
    broken.write_text("{}")
    assert runner.invoke(cli, ["report", str(broken)]).exit_code == 2


@pytest.mark.slow
def test_example_bm1(runner):
    result = runner.invoke(cli, ["example", "bm1"])
    assert result.exit_code == 0
    assert "bm1: PASS" in result.output


def test_syzygy_stable_flag_drops_projectives(runner):
    args = ["syzygy", "--algebra", FIX2, "--module", "S1", "-k", "2", "--format", "json"]
    plain = [r["value"] for r in json.loads(runner.invoke(cli, args).output)["results"]]
    assert plain == ["[1, 0]", "[0, 1]", "[0, 0]"]
    stable = [r["value"] for r in json.loads(runner.invoke(cli, args + ["--stable"]).output)["results"]]
    assert stable == ["[1, 0]", "[0, 0]", "[0, 0]"]


@pytest.mark.slow
def test_cpq_reports_and_class_ids_are_reproducible(runner, tmp_path):
    def run(tag):
        example = runner.invoke(cli, ["example", "cpq", "--verify", "all", "--horizon", "6", "--format", "json"])
        assert example.exit_code == 0, example.output
        doc = runner.invoke(cli, ["opposite", "--example", "cpq", "--m", "8"])
        op = tmp_path / f"op{tag}.qa"
        op.write_text(doc.stdout)
        suite = runner.invoke(cli, ["phidim-suite", "--algebra", str(op), "--horizon", "8", "--format", "json"])
        assert suite.exit_code in (0, 3), suite.output
        reg = tmp_path / f"reg{tag}.json"
        saved = runner.invoke(cli, ["registry", "save", "--example", "cpq", "--registry", str(reg)])
        assert saved.exit_code in (0, 3), saved.output
        return example.stdout_bytes, suite.stdout_bytes, reg.read_bytes()

    first, second = run(1), run(2)
    assert first == second
    checks = {r["check"]: r["status"] for r in json.loads(first[0])["reports"]}
    assert checks == {"cpq": "pass", "cpq-claims": "pass"}
    value = json.loads(first[1])["results"][0]["value"]
    assert int(value.replace("unknown(>=", "").rstrip(")")) >= 7
