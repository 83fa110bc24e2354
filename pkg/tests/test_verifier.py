import json

from schroder_lab import QPoly, Status, concordance, q_int
from schroder_lab.statistics import Interpretation
from schroder_lab.verifier import (ANNEXE1_TABLE, CheckReport, annexe1, check_haiman, check_no_symmetric_dinv,
                                   check_q_identity, exit_code, proposed_d1_witness, run_group, summary_table,
                                   validate_interpretation)


def test_annexe1_rows():
    rep = annexe1()
    assert rep.status is Status.PASS
    rows = {tuple(r["P"]): (r["poly"], r["w"]) for r in rep.actual["rows"]}
    assert len(rows) == 12
    assert rows[(0, 0, 1, 2)] == (QPoly(4), 0)
    assert rows[(0, 0, 2, 1)] == (QPoly([1, 2, 1]), 1)
    assert rows[(2, 1, 0, 0)] == (QPoly([1, 1, 0, 1, 1]), 2)
    assert rep.actual["equal_to_[4]_q"] == []


def test_annexe1_table_is_complete():
    assert len({row[0] for row in ANNEXE1_TABLE}) == 12
    assert all(poly != q_int(4) for _, poly, _ in ANNEXE1_TABLE)


def test_symmetry_sweep():
    rep = check_no_symmetric_dinv()
    assert rep.status is Status.PASS
    assert rep.actual["area_multiset"] == [0, 0, 1, 2]
    assert rep.actual["witnesses"] == []
    lo, hi = rep.params["w_range"]
    assert rep.actual["coverage"] == 12 * (hi - lo + 1)


def test_q_identity_examples():
    rep = check_q_identity(2, 1)
    assert rep.status is Status.PASS and rep.expected == q_int(3)
    for n in range(4):
        rep = check_q_identity(n, 0)
        assert rep.expected == QPoly(1)
    assert check_q_identity(4, 2).status is Status.PASS


def test_interpretation_validation_picks_line_area():
    chosen, reports = validate_interpretation(4)
    assert chosen is Interpretation.LINE_AREA
    assert all(r.status is Status.PASS for r in reports)


def test_haiman_fails_under_left_area():
    assert check_haiman(3, 2).status is Status.PASS
    assert check_haiman(3, 2, Interpretation.LEFT_AREA).status is Status.FAIL


def test_proposed_witness_exists():
    rep = proposed_d1_witness()
    assert rep.status is Status.PASS
    assert rep.counterexample is not None


def test_mismatch_is_not_breaking():
    reps = concordance("E", max_a=2, max_b=2, rs=(2,))
    assert any(r.status is Status.MISMATCH for r in reps)
    assert exit_code(reps) == 0
    summary = reps[-1]
    assert summary.check == "E_summary"
    assert json.loads(summary.to_jsonl())["counterexample"]["E"]["params"] == {"a": 1, "b": 2, "p": "0", "r": 2, "q": 0}


def test_fail_is_breaking():
    bad = CheckReport("x", {}, 1, "ORACLE", 2, Status.FAIL)
    assert exit_code([bad]) == 1


def test_report_json_counts_are_strings():
    rep = concordance("schroder_closed", max_n=2, rs=(1,))[0]
    data = json.loads(rep.to_jsonl())
    assert isinstance(data["expected"], str)
    assert all(isinstance(v, int) for v in data["params"].values())


def test_run_group_is_deterministic():
    a = [r.to_jsonl() for r in run_group("counts", max_n=3)]
    b = [r.to_jsonl() for r in run_group("counts", max_n=3)]
    assert a == b


def test_summary_table_lists_checks():
    table = summary_table(run_group("annexe1"))
    assert table.splitlines()[1].split() == ["annexe1", "1", "0", "0", "0"]


def test_occupancy_is_necessary_only_for_r1():
    from schroder_lab.verifier import verify_occupancy

    reps = verify_occupancy(max_n=3, rs=(1, 2))
    assert all(r.actual["necessary"] for r in reps if r.params["r"] == 1)
    assert not any(r.actual["necessary"] for r in reps if r.params["r"] == 2 and r.params["n"] >= 2)
    dyck3 = next(r for r in reps if r.params == {"n": 3, "d": 3, "r": 1})
    assert dyck3.counterexample["not_sufficient"] == [1, 1, 2]
    assert all(r.status is not Status.FAIL for r in reps)
