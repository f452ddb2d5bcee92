import json
import os

import pytest

from conftest import session_path
from fthresh.cli import Session, UsageError, emit_nu_table, read_nu_table, run
from fthresh.frobenius import threshold_estimate


def run_report(argv):
    code, document = run(argv)
    return code, document["report"]


def test_nu_on_regular_session():
    code, report = run_report(
        ["nu", "--session", session_path("ex-regular.json"), "--a", "m", "--J", "m", "--e", "1"]
    )
    assert code == 0
    assert report["results"]["nu"] == 2


def test_threshold_on_blowup_session():
    code, report = run_report(
        ["threshold", "--session", session_path("ex-blowup.json"), "--a", "m", "--J", "m", "--e-max", "3"]
    )
    assert code == 0
    results = report["results"]
    lower = results["lower"][0] / results["lower"][1]
    upper = results["upper"][0] / results["upper"][1]
    assert lower <= 2.5 <= upper
    assert results["guess"] == [5, 2]
    for record in results["records"]:
        assert isinstance(record["nu"], int)


def test_every_numeric_is_exact():
    code, report = run_report(
        ["threshold", "--session", session_path("ex-regular.json"), "--a", "m", "--J", "m", "--e-max", "2"]
    )

    def no_floats(node):
        if isinstance(node, float):
            raise AssertionError(f"float leaked into report: {node}")
        if isinstance(node, dict):
            for v in node.values():
                no_floats(v)
        if isinstance(node, list):
            for v in node:
                no_floats(v)

    no_floats(report)


def test_check_subcommand_exit_codes():
    code, report = run_report(
        ["check", "--session", session_path("ex-regular.json"), "--name", "monotonicity",
         "--trials", "5", "--seed", "0", "--e-max", "2"]
    )
    assert code == 0 and report["results"]["verdict"] == "pass"
    code, report = run_report(
        ["check", "--session", session_path("ex-node4.json"), "--name", "colon-lemma", "--x", "x"]
    )
    assert code == 3  # in(x) is a zerodivisor on the graded fiber: inconclusive
    code, report = run_report(
        ["check", "--session", session_path("ex-regular.json"), "--name", "superficial", "--x", "x"]
    )
    assert code == 0


def test_member_subcommand_variants():
    code, report = run_report(
        ["member", "--session", session_path("ex-regular.json"), "--a", "m", "--x", "x^2"]
    )
    assert code == 0 and report["results"]["contained"] is True
    code, report = run_report(
        ["member", "--session", session_path("ex-regular.json"), "--a", "m2", "--b", "m"]
    )
    assert code == 0 and report["results"]["contained"] is False
    with pytest.raises(UsageError):
        run(["member", "--session", session_path("ex-regular.json"), "--a", "m"])


def test_check_theorem_a_through_cli():
    code, report = run_report(
        ["check", "--session", session_path("ex-regular.json"), "--name", "theoremA",
         "--trials", "3", "--seed", "0", "--e-max", "2"]
    )
    assert code == 0 and report["results"]["verdict"] == "pass"


def test_verify_gr_exit_codes():
    code, _ = run_report(
        ["verify-gr", "--session", session_path("ex-blowup.json"), "--a", "x*y", "--degree", "4"]
    )
    assert code == 0
    code, report = run_report(
        ["verify-gr", "--session", session_path("ex-blowup.json"), "--a", "z^2*w", "--degree", "4"]
    )
    assert code == 1 and not report["results"]["passed"]


def test_verify_thmA_on_blowup():
    code, report = run_report(
        ["verify-thmA", "--session", session_path("ex-blowup.json"), "--b", "b", "--e-max", "2"]
    )
    assert code == 0
    assert report["results"]["verdict"] == "pass"


def test_usage_errors():
    with pytest.raises(UsageError):
        run(["nu", "--session", session_path("ex-regular.json"), "--a", "m", "--J", "m"])  # no --e
    with pytest.raises(UsageError):
        run(["frobnicate", "--session", session_path("ex-regular.json")])
    with pytest.raises(UsageError):
        run(["dim", "--session", "/nonexistent/path.json"])


def test_malformed_session_reports_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"p": 2, "variables": ["x"], ')
    with pytest.raises(UsageError) as err:
        run(["dim", "--session", str(bad)])
    assert "line" in str(err.value)


def test_report_determinism():
    argv = ["threshold", "--session", session_path("ex-regular.json"), "--a", "m", "--J", "m", "--e-max", "2"]
    _, first = run(argv)
    _, second = run(argv)
    assert json.dumps(first["report"], sort_keys=True) == json.dumps(second["report"], sort_keys=True)
    assert first["digest"] == second["digest"]


def test_report_subcommand_roundtrip(tmp_path):
    out = tmp_path / "report.json"
    code, _ = run(
        ["dim", "--session", session_path("ex-regular.json"), "--out", str(out)]
    )
    assert code == 0
    code, result = run(["report", str(out)])
    assert code == 0 and result["report"]["results"]["digest_ok"]
    tampered = json.loads(out.read_text())
    tampered["report"]["results"]["dimension"] = 99
    out.write_text(json.dumps(tampered))
    code, result = run(["report", str(out)])
    assert code == 1


def test_nu_table_roundtrip(tmp_path, regular2):
    est = threshold_estimate(regular2.maximal_ideal(), regular2.maximal_ideal(), 3)
    path = tmp_path / "table.csv"
    emit_nu_table(est, str(path))
    rows = read_nu_table(str(path))
    assert [(r["e"], r["q"], r["nu"]) for r in rows] == [(r.e, r.q, r.nu) for r in est.records]
    for row, (_, lower, upper) in zip(rows, est.row_bounds()):
        assert row["lower"] == lower and row["upper"] == upper
    emit_nu_table(est, str(path))
    again = read_nu_table(str(path))
    assert again == rows
    with pytest.raises(UsageError):
        emit_nu_table(est, "")


def test_threshold_csv_flag(tmp_path):
    out = tmp_path / "nu.csv"
    code, _ = run(
        ["threshold", "--session", session_path("ex-regular.json"), "--a", "m", "--J", "m",
         "--e-max", "2", "--out", str(out)]
    )
    assert code == 0 and out.exists()
    rows = read_nu_table(str(out))
    assert [r["nu"] for r in rows] == [2, 6]


def test_all_fixture_sessions_load():
    for name in (
        "ex-regular.json",
        "ex-blowup.json",
        "ex-node4.json",
        "ex-determinantal.json",
        "ex-fermat-cubic.json",
        "ex-cusp.json",
    ):
        session = Session.load(session_path(name))
        assert session.ring.nvars >= 1
        assert "m" in session.ideals


def test_session_elements_and_inline_ideals():
    session = Session.load(session_path("ex-fermat-cubic.json"))
    assert str(session.element("u")) == "z^2"
    inline = session.ideal("x, y")
    assert sorted(str(g) for g in inline.generators) == ["x", "y"]
    with pytest.raises(UsageError):
        session.ideal("x + ")


def test_tc_and_frational_subcommands():
    code, report = run_report(
        ["tc", "--session", session_path("ex-fermat-cubic.json"), "--x", "u", "--J", "J", "--c", "c", "--e-max", "3"]
    )
    assert code == 0
    assert report["results"]["kind"] == "consistent_with_star"
    code, report = run_report(
        ["frational", "--session", session_path("ex-cusp.json"), "--J", "J", "--c", "c", "--e-max", "3"]
    )
    assert code == 0
    assert report["results"]["verdict"] == "not_certified"


def test_fedder_and_fpt_subcommands():
    code, report = run_report(["fedder", "--session", session_path("ex-node4.json")])
    assert code == 0 and report["results"]["f_pure"] is True
    code, report = run_report(
        ["fpt", "--session", session_path("ex-regular.json"), "--a", "m", "--e-max", "2"]
    )
    assert code == 0
    assert [r["b"] for r in report["results"]["records"]] == [2, 6]
