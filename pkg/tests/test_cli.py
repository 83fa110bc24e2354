import json

import pytest

from schroder_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_closed(capsys):
    assert run(capsys, "count", "closed", "--n", "2", "--d", "1", "--r", "2") == (0, "4\n", "")


def test_count_brute_and_parking(capsys):
    assert run(capsys, "count", "brute", "--n", "2", "--d", "1", "--r", "2")[1] == "4\n"
    assert run(capsys, "count", "closed", "--n", "3", "--d", "3", "--object", "parking")[1] == "16\n"
    assert run(capsys, "parking", "count", "--n", "3", "--d", "3")[1] == "16\n"


def test_count_unitfrac_closed(capsys):
    assert run(capsys, "count", "closed", "--mode", "unitfrac", "--n", "2", "--d", "2", "--r", "2")[1] == "4\n"
    assert run(capsys, "count", "closed", "--mode", "unitfrac", "--n", "2", "--d", "3", "--r", "2")[1] == "0\n"


def test_enumerate_empty_family(capsys):
    assert run(capsys, "enumerate", "--mode", "unitfrac", "--n", "2", "--d", "3", "--r", "2") == (0, "", "")


def test_enumerate_jsonl(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--d", "1", "--r", "2")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 4
    assert {"steps": "GDRR", "code": "0~,2"} in rows


def test_enumerate_csv_and_table(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", "2", "--d", "1", "--r", "2", "--format", "csv")
    assert out.splitlines()[0] == "steps,code" and len(out.splitlines()) == 5
    _, out, _ = run(capsys, "enumerate", "--n", "2", "--d", "1", "--r", "2", "--format", "table")
    assert out.startswith("# interpretation=linearea")


def test_output_is_byte_identical(capsys):
    argv = ["stats", "--n", "4", "--d", "2", "--format", "csv"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_stats(capsys):
    _, out, _ = run(capsys, "stats", "--n", "3", "--d", "3", "--summary", "--format", "csv")
    rows = out.splitlines()[1:]
    assert sum(int(r.split(",")[2]) for r in rows) == 5


def test_stats_undefined_variant_is_usage_error(capsys):
    code, _, err = run(capsys, "stats", "--n", "3", "--d", "2", "--r", "2")
    assert code == 2 and "--variant" in err


def test_parking_factor(capsys):
    code, out, _ = run(capsys, "parking", "factor", "--n", "5", "--d", "3", "--r", "2", "--seq", "0~,4,0,4,2~")
    assert code == 0 and json.loads(out)["sigma"] == "31542"
    code, out, _ = run(capsys, "parking", "factor", "--n", "2", "--d", "2", "--seq", "2,0")
    assert code == 1 and json.loads(out)["parking"] is False


def test_parking_list(capsys):
    _, out, _ = run(capsys, "parking", "list", "--n", "2", "--d", "2")
    assert len(out.splitlines()) == 3


def test_formulas(capsys):
    assert run(capsys, "formula", "G", "--a", "2", "--b", "2", "--p", "0", "--r", "1", "--q", "0")[1] == "3\n"
    assert run(capsys, "formula", "G", "--a", "4", "--b", "2", "--p", "1/2", "--r", "2", "--q", "1")[0] == 0
    assert run(capsys, "formula", "E", "--a", "1", "--b", "2", "--p", "2", "--r", "1", "--q", "1")[1] == "3\n"
    assert run(capsys, "formula", "H", "--a", "0", "--b", "2", "--p", "2", "--r", "1", "--q", "0",
               "--s", "0")[1] == "1\n"
    assert run(capsys, "formula", "F", "--i", "0", "--d", "0", "--dr", "0", "--r", "1")[1] == "1\n"
    assert run(capsys, "formula", "psch", "--n", "1", "--d", "0", "--r", "1",
               "--degenerate-mode", "fallback")[1] == "1\n"
    assert run(capsys, "formula", "chsch", "--n", "1", "--d", "0", "--r", "1", "--h", "1",
               "--degenerate-mode", "fallback")[1] == "1\n"


def test_formula_domain_error_exits_1(capsys):
    code, _, err = run(capsys, "formula", "G", "--a", "0", "--b", "0", "--p", "0", "--r", "1", "--q", "0")
    assert code == 1 and "G" in err


def test_verify_annexe1(capsys):
    code, out, _ = run(capsys, "verify", "annexe1")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "PASS" and len(rep["actual"]["rows"]) == 12


def test_verify_mismatch_group_exits_0(capsys):
    code, out, _ = run(capsys, "verify", "hexagon", "--max-n", "2", "--format", "table")
    assert code == 0 and "MISMATCH-REPORTED" in out


@pytest.mark.parametrize("argv,flag", [
    (["count", "closed", "--n", "2", "--d", "5"], "--d"),
    (["count", "closed", "--n", "-1", "--d", "0"], "--n"),
    (["count", "closed", "--n", "2", "--d", "1", "--r", "0"], "--r"),
    (["count", "closed", "--d", "1"], "--n"),
    (["enumerate", "--n", "2", "--d", "1", "--h", "9"], "--h"),
    (["enumerate", "--n", "2", "--d", "1", "--max-items", "0"], "--max-items"),
    (["enumerate", "--n", "2", "--d", "1", "--format", "xml"], "--format"),
    (["enumerate", "--n", "2", "--d", "1", "--mode", "weird"], "--mode"),
    (["formula", "G", "--a", "1", "--b", "1", "--p", "x/y", "--r", "1", "--q", "0"], "--p"),
    (["parking", "factor", "--n", "2", "--d", "2", "--seq", "0"], "--seq"),
])
def test_usage_errors_name_the_flag(capsys, argv, flag):
    code, out, err = run(capsys, *argv)
    assert code == 2 and flag in err and out == ""


def test_size_guard(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "5", "--d", "2", "--r", "2", "--max-items", "100")
    assert code == 2 and "--max-items" in err and out == ""


def test_out_file(tmp_path, capsys):
    target = tmp_path / "paths.jsonl"
    assert main(["enumerate", "--n", "2", "--d", "1", "--r", "2", "--out", str(target)]) == 0
    assert len(target.read_text().splitlines()) == 4
