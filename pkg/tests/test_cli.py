import io
import json

import pandas as pd
import pytest

from app.classify import is_one_absorbing_primary
from app.ideals.ideal import parse_ideal
from app.ideals.operations import radical
from app.main import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, build_parser, main
from app.rings.factor import prime_power
from app.rings.parsing import parse_ring


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_classify_json(capsys):
    status, out, _ = run(capsys, "classify", "--ring", "Z", "--ideal", "(12)")
    assert status == EXIT_OK
    data = json.loads(out)
    assert data["radical"] == "(6)"
    assert data["properties"]["one_absorbing_primary"]["witness"] == ["13", "3", "4"]
    assert data["properties"]["primary"]["witness"] == ["3", "4"]
    assert data["properties"]["two_absorbing_primary"]["status"] == "proven"


def test_classify_kxy_text(capsys):
    status, out, _ = run(capsys, "classify", "--ring", "kxy", "--ideal", "x^2,x*y", "--format", "text")
    assert status == EXIT_OK
    assert "primary=refuted(x,y)" in out
    assert "one_absorbing_primary=proven" in out
    assert "DISAGREEMENT" not in out


def test_classify_csv_row(capsys):
    status, out, _ = run(capsys, "classify", "--ring", "Z/12", "--ideal", "(0)", "--format", "csv")
    assert status == EXIT_OK
    table = pd.read_csv(io.StringIO(out), dtype=str)
    assert len(table) == 1
    assert table.iloc[0]["radical"] == "(6)"
    assert table.iloc[0]["one_abs"] == "false"


@pytest.mark.parametrize(
    "argv, token",
    [
        (["classify", "--ring", "Q", "--ideal", "(2)"], "Q"),
        (["classify", "--ring", "Z", "--ideal", "12"], "12"),
        (["scan", "--family", "int", "--n-range", "2-30"], "2-30"),
        (["verify", "--theorem", "T99"], "T99"),
    ],
)
def test_usage_errors_name_the_token(capsys, argv, token):
    status, out, err = run(capsys, *argv)
    assert status == EXIT_USAGE
    assert out == ""
    assert repr(token) in err


def test_whole_ring_is_rejected(capsys):
    status, _, err = run(capsys, "classify", "--ring", "Z/12", "--ideal", "(1)")
    assert status == EXIT_USAGE
    assert "whole ring" in err


def test_scan_int_csv(capsys):
    status, out, _ = run(capsys, "scan", "--family", "int", "--n-range", "2..30")
    assert status == EXIT_OK
    table = pd.read_csv(io.StringIO(out), dtype=str)
    assert list(table.columns)[:3] == ["ring", "ideal", "radical"]
    one_abs = [int(i.strip("()")) for i in table[table["one_abs"] == "true"]["ideal"]]
    assert one_abs == [m for m in range(2, 31) if prime_power(m) is not None]


def test_scan_prod_rows(capsys):
    status, out, _ = run(capsys, "scan", "--family", "prod", "--left", "4", "--right", "9")
    assert status == EXIT_OK
    assert len(out.strip().splitlines()) == 1 + 9


def test_scan_missing_bounds(capsys):
    status, _, _ = run(capsys, "scan", "--family", "prod", "--left", "4")
    assert status == EXIT_USAGE


def test_scan_is_thread_independent(capsys):
    _, single, _ = run(capsys, "scan", "--family", "zmod", "--n-range", "2..40", "--threads", "1")
    _, many, _ = run(capsys, "scan", "--family", "zmod", "--n-range", "2..40", "--threads", "8")
    assert single == many


def test_verify_json(capsys):
    status, out, _ = run(capsys, "verify", "--theorem", "C1,EX-e2", "--max-n", "100")
    assert status == EXIT_OK
    reports = json.loads(out)
    assert [r["theorem"] for r in reports] == ["C1", "EX-e2"]
    assert reports[0]["instances_checked"] == 99
    assert all("elapsed" not in r for r in reports)


def test_verify_timings_and_csv(capsys):
    _, out, _ = run(capsys, "verify", "--theorem", "C1", "--max-n", "30", "--timings")
    assert "elapsed" in json.loads(out)[0]
    _, out, _ = run(capsys, "verify", "--theorem", "C1", "--max-n", "30", "--format", "csv")
    assert out.splitlines()[0] == "theorem,scope,instances_checked,violations"


def test_verify_mutation_exits_with_violation(capsys):
    status, out, err = run(
        capsys, "verify", "--theorem", "CHAIN", "--mutate", "2abs-implies-1abs", "--max-n", "20"
    )
    assert status == EXIT_VIOLATION
    (report,) = json.loads(out)
    assert len(report["violations"]) == 7
    assert "violations found" in err


def test_verify_family_subset(capsys):
    status, out, _ = run(capsys, "verify", "--theorem", "T-1", "--max-n", "12", "--family", "zmod")
    assert status == EXIT_OK
    assert json.loads(out)[0]["scope"] == "Z/n n<=12"


def test_construct(capsys):
    status, out, _ = run(capsys, "construct", "--kind", "xm", "--ring", "kxy", "--elem", "x")
    assert status == EXIT_OK
    data = json.loads(out)
    assert data["ideal"] == "x^2,x*y"
    assert data["witnesses"] == ["x", "y"]

    status, out, _ = run(capsys, "construct", "--kind", "pm", "--ring", "kxy", "--prime", "x,y", "--format", "text")
    assert status == EXIT_OK
    assert out.startswith("PM in kxy: x^2,x*y,y^2")


def test_construct_precondition(capsys):
    status, out, err = run(capsys, "construct", "--kind", "xm", "--ring", "Zloc:5", "--elem", "p")
    assert status == EXIT_USAGE
    assert out == ""
    assert "xR equals the maximal ideal" in err
    assert "[principal-maximal]" in err


def test_construct_needs_element(capsys):
    status, _, err = run(capsys, "construct", "--kind", "xm", "--ring", "kxy")
    assert status == EXIT_USAGE
    assert "--elem" in err


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args(["classify", "--ring", "Z"])
    assert excinfo.value.code == EXIT_USAGE


def test_scan_rows_reparse_and_reverify(capsys):
    _, out, _ = run(capsys, "scan", "--family", "zmod", "--n-range", "10..14")
    table = pd.read_csv(io.StringIO(out), dtype=str)
    for row in table.to_dict(orient="records"):
        ring = parse_ring(row["ring"])
        ideal = parse_ideal(ring, row["ideal"])
        assert str(radical(ideal)) == row["radical"]
        if ideal.is_proper:
            expected = "true" if is_one_absorbing_primary(ideal).holds else "false"
            assert row["one_abs"] == expected, f"{row['ring']} {row['ideal']}"
