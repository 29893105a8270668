import json

import pytest

from mlimage.cli import main

CENTRAL = "[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]"
DIAG = '[["1","0","0"],["0","-1","0"],["0","0","0"]]'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_synthesize_then_verify(tmp_path, capsys):
    code, report = run(capsys, "synthesize", "--poly", CENTRAL, "--target", DIAG, "--n", "3")
    assert code == 0 and report["verified"] is True
    assert report["branch"][0].startswith("ProductCase")
    path = tmp_path / "report.json"
    path.write_text(json.dumps(report))
    code, out = run(capsys, "verify", "--poly", CENTRAL, "--witnesses", f"@{path}", "--target", DIAG)
    assert code == 0 and out == {"verified": True}


def test_verify_tampered(tmp_path, capsys):
    _, report = run(capsys, "synthesize", "--poly", "[x1,x2]", "--target", DIAG)
    report["witnesses"][0][0][0] = "12345"
    path = tmp_path / "w.json"
    path.write_text(json.dumps(report["witnesses"]))
    code, out = run(capsys, "verify", "--poly", "[x1,x2]", "--witnesses", f"@{path}", "--target", DIAG)
    assert code == 1 and out == {"verified": False}


def test_verify_zero(capsys):
    zero = '[["0","0","0"],["0","0","0"],["0","0","0"]]'
    code, out = run(capsys, "verify", "--poly", "x1*x2 - x1*x2", "--witnesses", f"[{zero},{zero}]", "--target", zero)
    assert code == 0 and out["verified"]


def test_surjective_non_trace_zero(capsys):
    code, report = run(capsys, "synthesize", "--poly", "x1*x2*x3*x4", "--target", "[[1,2,3],[4,5,6],[7,8,9]]")
    assert code == 0 and report["branch"] == ["Surjective(s=1)"]


@pytest.mark.parametrize(
    "poly, target, code, err",
    [
        ("[x1,x2]", '[["1","0"],["0","-1"]]', 3, "DIM_TOO_SMALL"),
        ("0", DIAG, 3, "ZERO_POLY"),
        ("x1*x1", DIAG, 3, "NOT_MULTILINEAR"),
        ("[x1,x2", DIAG, 3, "PARSE_ERROR"),
        ("[x1,x2]", "[[1,0,0],[0,1,0],[0,0,0]]", 3, "NONZERO_TRACE"),
        ("[x1,x2]", "not json", 3, "PARSE_ERROR"),
        (CENTRAL, "[[0,0,2],[1,0,0],[0,1,0]]", 4, "NOT_SUPPORTED"),
    ],
)
def test_error_codes(capsys, poly, target, code, err):
    got, out = run(capsys, "synthesize", "--poly", poly, "--target", target)
    assert got == code and out["error"] == err


def test_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main(["synthesize", "--poly", "[x1,x2]", "--target", DIAG, "--n", "4"]) == 2
    assert main(["synthesize", "--poly", "[x1,x2]", "--target", "@/nonexistent/file"]) == 2
    capsys.readouterr()


@pytest.mark.parametrize(
    "poly, tag",
    [("x1*x2*x3*x4", "Surjective(s=1)"), ("[[[x2,x1],x3],x4]", "Lie4(i=1, z=1)")],
)
def test_decompose(capsys, poly, tag):
    code, out = run(capsys, "decompose", "--poly", poly)
    assert code == 0 and out["branch"] == [tag]


def test_selftest_vacuous_and_deterministic(capsys):
    code, first = run(capsys, "selftest", "--trials", "0")
    assert code == 0 and first["all_passed"]
    main(["selftest", "--trials", "3", "--seed", "9", "--nmax", "4"])
    a = capsys.readouterr().out
    main(["selftest", "--trials", "3", "--seed", "9", "--nmax", "4"])
    b = capsys.readouterr().out
    assert a == b
