import json

import pytest

from m2local.cli import main
from m2local.exact import parse_ratfun
from m2local.strata import f2


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeff(capsys):
    assert run(capsys, "coeff", "--k", "10", "--ell", "0")[:2] == (0, "1\n")


def test_f1_json(capsys):
    code, out, _ = run(capsys, "f1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"num": "1-u^2-2*u^4-u^6+u^8", "den": "(1-u^4)*(1-u^6)"}


def test_f1_csv(capsys):
    code, out, _ = run(capsys, "f1", "--format", "csv")
    assert out.splitlines() == ["num,den", "1-u^2-2*u^4-u^6+u^8,(1-u^4)*(1-u^6)"]


def test_f2_roundtrip(capsys):
    code, out, _ = run(capsys, "f2", "--json")
    j = json.loads(out)
    assert parse_ratfun(f"({j['num']})/({j['den']})") == f2()


def test_equivariant_five(capsys):
    code, out, _ = run(capsys, "equivariant", "--n", "5", "--format", "json")
    j = json.loads(out)
    assert code == 0 and j["dimension"] == 0
    assert all(c == 0 for _, c in j["coefficients"][3:])


def test_equivariant_text_deterministic(capsys):
    a = run(capsys, "equivariant", "--n", "4", "--symbolic")
    b = run(capsys, "equivariant", "--n", "4", "--symbolic")
    assert a == b and a[0] == 0


def test_stratum_series(capsys):
    code, out, _ = run(capsys, "stratum-series", "--group", "c2", "--rho", "1")
    assert code == 0
    assert out.strip() == "(1+6*u^2+u^4)/((1-u^2)^4*(1-v)^6)"


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle-compare", "--group", "q12", "--rho", "chi0",
                       "--max-u", "8", "--max-v", "4")
    assert (code, out.strip()) == (0, "agree")


def test_oracle_compare_jobs(capsys):
    args = ["oracle-compare", "--group", "o", "--rho", "chi", "--max-u", "6", "--max-v", "3", "--json"]
    a = run(capsys, *args)
    b = run(capsys, *args, "--jobs", "2")
    assert a == b


def test_bad_names(capsys):
    code, _, err = run(capsys, "stratum-series", "--group", "z9", "--rho", "1")
    assert code == 2 and "c2 c4 c6 c10 q8 q12 q24 t o i" in err
    code, _, err = run(capsys, "stratum-series", "--group", "q8", "--rho", "chi7")
    assert code == 2 and "chi0" in err


def test_usage_errors(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "coeff", "--k", "1")[0] == 2
    assert run(capsys, "f1", "--format", "xml")[0] == 2
    assert run(capsys, "equivariant", "--n", "12")[0] == 2


def test_verify_table1_exit_codes(capsys):
    code, out, _ = run(capsys, "verify-table1")
    assert code == 1 and "o:chi: MISMATCH" in out
    code2, out2, _ = run(capsys, "verify-table1")
    assert (code, out) == (code2, out2)
    assert run(capsys, "verify-table1", "--corrected")[0] == 0


def test_verify_covariants(capsys):
    a = run(capsys, "verify-covariants", "--json")
    b = run(capsys, "verify-covariants", "--json")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["ok"] is True


def test_table2(capsys):
    code, out, _ = run(capsys, "table2", "--numeric-only")
    assert code == 0 and "numeric MISMATCH" not in out
    assert run(capsys, "table2")[0] == 1
