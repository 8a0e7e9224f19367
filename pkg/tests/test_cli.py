import json

import pytest

from app.cli.main import main


def run(capsys, *argv):
    code = main([*argv, "--quiet"])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_derive_json(capsys):
    code, out, _ = run(capsys, "derive", "--n", "2", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert list(document)[:2] == ["command", "status"]
    assert document["status"] == "success"
    assert document["degree"] == 21
    assert document["trivial"] is False
    assert set(document["coefficients"]) == {"A", "B", "C", "D"}
    assert all(len(c) == 22 for c in document["coefficients"].values())
    assert all(isinstance(value, str) for value in document["coefficients"]["A"])
    assert document["error"] is None


def test_derive_json_is_deterministic(capsys):
    _, first, _ = run(capsys, "derive", "--n", "2", "--format", "json")
    _, second, _ = run(capsys, "derive", "--n", "2", "--format", "json")
    assert first == second


def test_derive_text_prints_the_factored_form(capsys):
    code, out, _ = run(capsys, "derive", "--n", "2")
    assert code == 0
    assert out.startswith("n = 2, degree 21, nontrivial")
    assert "f(p, q) = 2*p^21" in out


def test_derive_base_point_is_trivial(capsys):
    code, out, _ = run(capsys, "derive", "--n", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["trivial"] is True


@pytest.mark.parametrize("argv", [("derive", "--n", "0"), ("derive", "--n", "3", "--max-n", "2"), ("derive",)])
def test_usage_errors_exit_with_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_usage_error_json_payload(capsys):
    code, out, _ = run(capsys, "derive", "--n", "0", "--format", "json")
    document = json.loads(out)
    assert code == 2
    assert document["status"] == "failure"
    assert document["error"]["code"] == "usage_error"


def test_eval_numeric_example(capsys):
    code, out, _ = run(capsys, "eval", "--n", "2", "--p", "2", "--q", "1", "--format", "json")
    document = json.loads(out)
    assert code == 0
    assert document["equal"] is True
    assert {abs(int(v)) for v in document["values"].values()} == {5042177, 575226, 4659327, 3638026}
    assert document["sums"]["left"] == document["sums"]["right"]


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "--n", "2", "--p", "3", "--q", "1")
    assert code == 0
    assert "equal: yes" in out


def test_eval_degenerate_sample_warns(capsys):
    code, out, err = run(capsys, "eval", "--n", "2", "--p", "1", "--q", "1", "--format", "json")
    document = json.loads(out)
    assert code == 0
    assert document["degenerate"] is True
    assert document["warnings"]
    assert "warning:" in err


def test_audit(capsys):
    code, out, _ = run(capsys, "audit")
    assert code == 0
    assert len(out.splitlines()) == 5
    assert all(line.endswith("pass") for line in out.splitlines())


def test_audit_json(capsys):
    code, out, _ = run(capsys, "audit", "--format", "json")
    document = json.loads(out)
    assert code == 0
    assert [check["index"] for check in document["checks"]] == [1, 2, 3, 4, 5]


def test_audit_with_a_corrupted_constant_fails(capsys):
    code, out, err = run(capsys, "audit", "--corrupt", "residual_quadric")
    assert code == 1
    assert "residual_quadric: FAIL" in out
    assert "verification_failed" in err


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--limit", "100")
    assert (code, out) == (0, "")

    code, out, _ = run(capsys, "search", "--limit", "1")
    assert (code, out) == (0, "")

    code, out, _ = run(capsys, "search", "--limit", "160", "--workers", "2")
    assert code == 0
    assert "59^4 + 158^4 = 133^4 + 134^4 = 635318657" in out.splitlines()


def test_search_json(capsys):
    code, out, _ = run(capsys, "search", "--limit", "160", "--format", "json")
    document = json.loads(out)
    assert code == 0
    assert document["coincidences"] == [{"sum": "635318657", "a": 59, "b": 158, "c": 133, "d": 134}]


def test_torsion(capsys):
    code, out, _ = run(capsys, "torsion", "--bound", "3", "--format", "json")
    document = json.loads(out)
    assert code == 0
    assert document["torsion_order"] is None
    assert document["x_degrees"][:2] == [12, 12]
    assert "not a proof" in document["note"]
