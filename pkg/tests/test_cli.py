import io
import json
import subprocess
import sys

import pytest

from wreathcenter import (
    BlockPermutation, ClassType, class_product, class_size, compose, pad,
    parse_class_record, parse_class_type, parse_one_line, psi, type_of,
)
from wreathcenter.cli import run
from wreathcenter.goldens import K2_N8, K3_N8

K3_TEXT = "12 10 11 20 21 19 8 7 9 1 2 3 16 18 17 15 14 13 5 4 6 22 23 24"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().rstrip("\n"), err.getvalue()


def test_type_example():
    code, out, _ = call("type", "--k", "3", "--perm", K3_TEXT)
    assert code == 0
    assert out == "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}"
    assert parse_class_type(out) == type_of(K3_N8)


def test_type_pretty_table():
    code, out, _ = call("type", "--k", "3", "--perm", K3_TEXT, "--pretty")
    assert code == 0
    assert out.splitlines()[0].split() == ["rho", "x(rho)"]
    assert "[2,2]" in out


def test_class_size_example():
    assert call("class-size", "--k", "2", "--type", "{[1,1]:[3,2,1]; [2]:[2]}")[:2] == (0, "53760")
    assert class_size(type_of(K2_N8)) == 53760


def test_verify_paper():
    code, out, _ = call("verify-paper")
    assert code == 0
    assert out.splitlines()[-1] == "all 10 golden identities passed"
    assert sum(line.startswith("PASS") for line in out.splitlines()) == 10


def test_psi_round_trip():
    code, out, _ = call("psi", "--k", "3", "--perm", K3_TEXT)
    assert code == 0
    data = json.loads(out)
    w = psi(K3_N8)
    assert data["outer"] == list(w.outer.images)
    assert data["locals"] == [list(s.images) for s in w.locals]
    assert (data["k"], data["n"]) == (3, 8)


def test_multiply_round_trip():
    a, b = "2 1 3 4", "3 4 1 2"
    code, out, _ = call("multiply", "--k", "2", "--perm", a, "--perm", b)
    assert code == 0
    want = compose(BlockPermutation(2, parse_one_line(a)), BlockPermutation(2, parse_one_line(b)))
    assert BlockPermutation(2, parse_one_line(out)) == want
    assert call("multiply", "--k", "2", "--perm", a, "--perm", b, "--pretty")[1] == "(1,3,2,4)"


def test_classes_round_trip_and_order():
    code, out, _ = call("classes", "--k", "2", "--n", "3")
    assert code == 0
    recs = json.loads(out)
    types = [parse_class_record(r) for r in recs]
    assert sum(class_size(t) for t in types) == 48
    assert all(isinstance(r["size"], str) for r in recs)
    assert call("classes", "--k", "2", "--n", "3")[1] == out


def test_product_round_trip():
    x = "{[1]:[2]}"
    code, out, _ = call("product", "--k", "1", "--x", "{[1]:[2,1,1]}", "--y", "{[1]:[2,1,1]}")
    assert code == 0
    data = json.loads(out)
    got = {parse_class_type(t["type"], 1): int(t["coeff"]) for t in data["terms"]}
    xx = pad(parse_class_type(x), 4)
    assert got == class_product(xx, xx).terms


def test_coeff():
    code, out, _ = call("coeff", "--k", "2", "--x", "{[1,1]:[1,1]; [2]:[2]}",
                        "--y", "{[1,1]:[1,1]; [2]:[2]}", "--z", "{[1,1]:[3,1]}")
    assert (code, out) == (0, "3")


def test_polyfit():
    code, out, _ = call("polyfit", "--k", "1", "--x", "{[1]:[2]}", "--y", "{[1]:[2]}",
                        "--h", "{}", "--n-range", "3..9")
    assert code == 0
    data = json.loads(out)
    assert data["poly"] == ["0", "-1/2", "1/2"] and data["holdout_exact"]


def test_polyfit_too_few_points_is_domain_error():
    code, out, err = call("polyfit", "--k", "1", "--x", "{[1]:[2]}", "--y", "{[1]:[2]}",
                          "--h", "{}", "--n-range", "4..6")
    assert code == 1 and "TooFewPoints" in err


def test_enumerate_lists_group_deterministically():
    code, out, _ = call("enumerate", "--k", "2", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(set(lines)) == 8
    assert lines[0] == "1 2 3 4"
    assert call("enumerate", "--k", "2", "--n", "2")[1] == out


def test_domain_error_exit_1_and_json():
    code, _, err = call("type", "--k", "2", "--perm", "1 3 2 4")
    assert code == 1 and "NotBlockPreserving" in err
    code, out, _ = call("type", "--k", "2", "--perm", "1 3 2 4", "--error-json")
    assert code == 1
    data = json.loads(out)
    assert data["error"] == "NotBlockPreserving" and data["message"]


def test_budget_error_names_limit():
    code, out, _ = call("enumerate", "--k", "3", "--n", "6", "--budget", "1000", "--error-json")
    assert code == 1
    data = json.loads(out)
    assert data["error"] == "BudgetExceeded" and "1000" in data["message"]


@pytest.mark.parametrize("argv,flag", [
    (["type", "--perm", "1 2"], "--k"),
    (["classes", "--k", "2"], "--n"),
    (["polyfit", "--k", "1", "--x", "{}", "--y", "{}", "--h", "{}", "--n-range", "4-8"], "--n-range"),
    (["classes", "--k", "two", "--n", "2"], "--k"),
])
def test_usage_errors_exit_2_and_name_flag(argv, flag):
    code, _, err = call(*argv)
    assert code == 2
    assert flag in err


def test_unknown_verb_is_usage_error():
    assert call("frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wreathcenter", "class-size", "--k", "3",
                           "--type", "{[3]:[2]}"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "12"


def test_identity_type_round_trip():
    code, out, _ = call("type", "--k", "2", "--perm", "1 2 3 4")
    assert parse_class_type(out, 2) == ClassType.identity(2, 2)
