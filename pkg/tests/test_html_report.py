from quiverphi.html_report import render_report
from quiverphi.model import CheckReport, HypothesisReport, ReportDocument, ResultRow, combine, exit_status


def passing(name="lemma3.1"):
    return CheckReport(check=name, status="pass", details=["S1: summands per block A:1"])


def test_combine_prefers_failure():
    fail = CheckReport(check="prop3.5", status="fail", witnesses=["X: phi 9 > 6"])
    unknown = CheckReport(check="thm3.3", status="unknown")
    assert combine("all", [passing(), unknown]).status == "unknown"
    merged = combine("all", [passing(), unknown, fail])
    assert merged.status == "fail"
    assert merged.witnesses == ["X: phi 9 > 6"]
    assert merged.details[:3] == ["lemma3.1: pass", "thm3.3: unknown", "prop3.5: fail"]


def test_exit_status():
    assert exit_status([]) == 0
    assert exit_status([passing()]) == 0
    assert exit_status([passing(), CheckReport(check="x", status="unknown")]) == 3
    assert exit_status([CheckReport(check="x", status="fail")]) == 1
    doc = ReportDocument(command="pd", results=[ResultRow(item="S1", value="unknown(>40)")])
    assert doc.exit_status() == 3


def test_hypothesis_report_as_check():
    report = HypothesisReport(h1=True, h2=True, h3=False, h4="holds", witnesses={"H3": ["a1*a2"]})
    check = report.as_check()
    assert check.status == "fail"
    assert "H3: fails" in check.details
    assert check.witnesses == ["H3: a1*a2"]
    assert HypothesisReport(h1=True, h2=True, h3=True, h4="unknown").as_check().status == "unknown"


def test_render_report(tmp_path):
    doc = ReportDocument(command="verify", algebra="FIX5",
                         results=[ResultRow(item="<S1>", value="1", note="ranks 1,0,0")],
                         reports=[passing(), CheckReport(check="prop3.5", status="fail", witnesses=["w"])])
    out = tmp_path / "nested" / "report.html"
    assert render_report(doc, str(out)) == str(out)
    html = out.read_text(encoding="utf-8")
    assert "<title>quiverphi - verify - FIX5</title>" in html
    assert "&lt;S1&gt;" in html
    assert "status-pass" in html and "status-fail" in html
    assert "1 passed, 1 failed, 0 unknown" in html
