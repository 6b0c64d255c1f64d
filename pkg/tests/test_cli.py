import json

import pytest

from qrook.cli import main, parse_q, parse_u_list
from qrook.errors import InvalidArgument
from qrook.qfield import Q, as_ratfunc


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_u_list():
    assert parse_u_list("0,1") == (as_ratfunc(0), as_ratfunc(1))
    assert parse_u_list("1, 2*q^2") == (as_ratfunc(1), 2 * Q * Q)
    assert parse_u_list("3/2") == (as_ratfunc("3/2"),)


def test_parse_q():
    assert parse_q("symbolic") is None
    assert parse_q("1") == 1
    with pytest.raises(InvalidArgument):
        parse_q("pi")


def test_tableaux_multi(capsys):
    code, out = run(capsys, "tableaux", "--multi", "[[1],[1]]")
    assert code == 0
    assert len(json.loads(out)) == 2


def test_tableaux_skew(capsys):
    code, out = run(capsys, "tableaux", "--skew", "[2,1]/[1]")
    assert code == 0
    assert len(json.loads(out)) == 2


def test_tableaux_empty(capsys):
    code, out = run(capsys, "tableaux", "--multi", "[[],[]]")
    assert code == 0
    assert len(json.loads(out)) == 1


def test_verify_rook_symbolic(capsys):
    code, out = run(capsys, "verify", "--family", "rook", "--k", "3")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_aalg(capsys):
    code, out = run(
        capsys, "verify", "--family", "aAlg", "--k", "2", "--u", "1,2"
    )
    assert code == 0


def test_verify_rook_at_q1(capsys):
    code, out = run(capsys, "verify", "--family", "rook", "--k", "2", "--q", "1")
    assert code == 0


def test_bratteli_json_counts(capsys):
    code, out = run(capsys, "bratteli", "--family", "A", "--levels", "3")
    assert code == 0
    data = json.loads(out)
    assert [len(level) for level in data["levels"]] == [1, 2, 4, 7]


def test_bratteli_dot_deterministic(capsys):
    _, out1 = run(capsys, "bratteli", "--family", "B", "--levels", "3", "--format", "dot")
    _, out2 = run(capsys, "bratteli", "--family", "B", "--levels", "3", "--format", "dot")
    assert out1 == out2
    assert out1.startswith("digraph")


def test_dims(capsys):
    code, out = run(capsys, "dims", "--rook", "4")
    assert code == 0
    data = json.loads(out)
    assert data["agree"] is True
    assert data["dimensions"]["4"]["formula"] == 209


def test_schurweyl(capsys):
    code, out = run(capsys, "schurweyl", "--m", "1,2", "--k", "2", "--u", "0,1")
    assert code == 0
    data = json.loads(out)
    assert data["rook_identity"] is True
    assert data["centralizer"] == {
        "agree": True,
        "dimension": 7,
        "predicted": 7,
    }


def test_semisimple(capsys):
    code, out = run(
        capsys, "semisimple", "--family", "aAlg", "--k", "2", "--u", "1,q^2"
    )
    assert code == 0
    assert json.loads(out)["semisimple"] is False
    code, out = run(
        capsys, "semisimple", "--family", "rook", "--k", "6", "--q", "1"
    )
    assert json.loads(out)["semisimple"] is True


def test_rep_export(capsys):
    code, out = run(capsys, "rep", "--multi", "[[2],[1]]", "--u", "2,3")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 3
    assert "T1" in data["matrices"] and "X3" in data["matrices"]


def test_rep_shifted(capsys):
    code, out = run(capsys, "rep", "--k", "4", "--d", "2", "--u1", "1")
    assert code == 0
    assert json.loads(out)["dimension"] == 5


def test_determinism(capsys):
    _, out1 = run(capsys, "rep", "--multi", "[[1],[1]]", "--u", "0,1")
    _, out2 = run(capsys, "rep", "--multi", "[[1],[1]]", "--u", "0,1")
    assert out1 == out2


def test_error_exit_code(capsys):
    code = main(["rep", "--multi", "[[1],[1]]"])
    assert code == 2
