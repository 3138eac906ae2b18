import csv
import io

import pytest

from domroots.cli import RunConfig, UsageError, fmt_num, main, parse_range


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_fmt_num():
    assert fmt_num(-0.0) == "0"
    assert fmt_num(1 / 3) == "0.333333333333"
    assert fmt_num(4.0) == "4"


def test_parse_range():
    assert parse_range("2..6") == [2, 3, 4, 5, 6]
    assert parse_range("7") == [7]
    for bad in ("a..b", "6..2"):
        with pytest.raises(UsageError):
            parse_range(bad)


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("roots", precision_bits=32)
    with pytest.raises(UsageError):
        RunConfig("roots", tol=0)


def test_poly_csv():
    code, out, _ = run("poly", "friendship", "2")
    assert code == 0 and out == "0,0\n1,1\n2,8\n3,10\n4,5\n5,1\n"


def test_poly_text():
    code, out, _ = run("poly", "book", "1", "--format", "text")
    assert code == 0 and out.strip() == "1*x^4 + 4*x^3 + 6*x^2"


def test_usage_errors():
    assert run("poly", "friendship", "0")[0] == 2
    assert run("poly", "cube", "3")[0] == 2
    assert run("roots", "book", "3", "--precision", "16")[0] == 2
    assert run()[0] == 2
    assert run("table", "modulus", "--n", "3..3")[0] == 2


def test_roots_csv():
    code, out, _ = run("roots", "book", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 8
    assert sum(1 for r in rows if r["modulus"] == "0") == 2
    assert all(float(r["residual"]) < 1e-10 for r in rows)


def test_table_round_trip(tmp_path):
    code, out, _ = run("table", "friendship-real", "--n", "2..6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,x_minus,x_plus" and lines[1].startswith("2,-1.66099253")
    rows = list(csv.reader(io.StringIO(out)))
    again = "".join(",".join(r) + "\n" for r in rows)
    assert again == out
    target = tmp_path / "t.csv"
    assert run("table", "friendship-real", "--n", "2..6", "--out", str(target))[0] == 0
    assert target.read_text() == out


def test_book_table():
    code, out, _ = run("table", "book-real", "--n", "3..4")
    assert code == 0
    assert out.splitlines()[0] == "n,root_1,root_2,zero_multiplicity,parity"
    assert out.splitlines()[2].endswith(",2,even")
    assert run("table", "book-real", "--n", "1..2")[0] == 2


def test_plot_friendship(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run("plot", "friendship", "10", "--out", str(a))[0] == 0
    assert run("plot", "friendship", "10", "--out", str(b))[0] == 0
    svg = a.read_text()
    assert svg == b.read_text()
    assert 'class="bound"' in svg and 'r="4.798283"' in svg
    assert svg.count('class="root"') == 21


def test_plot_book(tmp_path):
    f = tmp_path / "b.svg"
    assert run("plot", "book", "20", "--out", str(f))[0] == 0
    svg = f.read_text()
    for name in ("C12", "C13", "C23"):
        assert f'class="component {name}"' in svg
    assert 'class="special" cx="0" cy="0"' in svg
    assert 'class="special" cx="-0.5" cy="0"' in svg


def test_plot_errors(tmp_path):
    assert run("plot", "book", "5")[0] == 2
    assert run("plot", "book", "5", "--out", str(tmp_path / "missing" / "x.svg"))[0] == 2


def test_oracle(tmp_path):
    f = tmp_path / "c4.adj"
    f.write_text("0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n")
    code, out, _ = run("oracle", str(f))
    assert code == 0 and out == "0,0\n1,0\n2,6\n3,4\n4,1\n"
    f.write_text("")
    code, _, err = run("oracle", str(f))
    assert code == 2 and "no vertices" in err
    f.write_text("0: 1\n1:\n")
    code, _, err = run("oracle", str(f))
    assert code == 2 and "0 lists 1" in err
    assert run("oracle", str(tmp_path / "nope"))[0] == 2


def test_verify_corona():
    code, out, _ = run("verify", "corona")
    assert "PASS     B1oF1 oracle equality" in out
    assert "PASS     B1oF1: D(-2) = 0" in out
    # B(2m+1)oF(2m) has real roots besides 0 and -2, so the suite fails honestly
    assert "FAIL     B3oF2: only nonzero real root is -2" in out
    assert code == 1
    assert out == run("verify", "corona")[1]
