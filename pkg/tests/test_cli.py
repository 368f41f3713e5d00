import json
import re
import subprocess
import sys

import pytest

from schubrest.cli import main
from schubrest.laurent import LaurentPolynomial
from schubrest.restriction import restrict_h
from schubrest.core_index import GrassIndex


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN = ["--d", "3", "--n", "6", "--alpha", "1,3,5", "--beta", "2,5,6"]


def test_restrict_h_text(capsys):
    code, out, _ = run(capsys, "restrict", *GOLDEN, "--theory", "h")
    assert code == 0
    expected = restrict_h(GrassIndex(3, 6, (1, 3, 5)), GrassIndex(3, 6, (2, 5, 6))).to_text()
    assert out.strip() == expected


def test_restrict_factored(capsys):
    code, out, _ = run(capsys, "restrict", *GOLDEN, "--theory", "h", "--factored")
    assert out.strip() == "(t6-t1)(t6-t3)(t5-t1)+(t6-t1)(t5-t4)(t5-t1)"
    code, out, _ = run(capsys, "restrict", *GOLDEN, "--theory", "k", "--factored")
    assert out.strip().startswith("-[(t6/t1-1)")
    code, out, _ = run(capsys, "restrict", *GOLDEN, "--format", "latex", "--factored")
    assert out.startswith(r"-\left[")


def test_restrict_trivial_and_vanishing(capsys):
    assert run(capsys, "restrict", "--alpha", "1,2,3", "--beta", "4,5,6", "--d", "3", "--n", "6", "--theory", "k")[1] == "1\n"
    assert run(capsys, "restrict", "--alpha", "2,5,6", "--beta", "1,3,5", "--d", "3", "--n", "6", "--theory", "k")[1] == "0\n"


@pytest.mark.parametrize("alpha", ["1,1,3", "3,2,1", "0,1,2", "1,2,7", "1,2", "a,b,c"])
def test_restrict_bad_input(capsys, alpha):
    code, out, err = run(capsys, "restrict", "--d", "3", "--n", "6", "--alpha", alpha, "--beta", "2,5,6")
    assert code == 2 and out == "" and "error" in err


def test_restrict_json_round_trip(capsys):
    code, out, _ = run(capsys, "restrict", *GOLDEN, "--format", "json", "--factored")
    doc = json.loads(out)
    assert doc["request"] == {"d": 3, "n": 6, "alpha": [1, 3, 5], "beta": [2, 5, 6], "theory": "K"}
    poly = LaurentPolynomial.from_json(doc["result"]["polynomial"])
    assert poly.to_text() == doc["result"]["text"]
    assert doc["metadata"]["tableaux"] == 3
    assert len(doc["factored"]["terms"]) == 3 and doc["factored"]["sign"] == -1
    assert "seconds" not in doc["metadata"]


def test_output_is_deterministic(capsys):
    first = run(capsys, "restrict", *GOLDEN, "--format", "json")[1]
    second = run(capsys, "restrict", *GOLDEN, "--format", "json")[1]
    assert first == second
    assert "seconds" in json.loads(run(capsys, "restrict", *GOLDEN, "--format", "json", "--timings")[1])["metadata"]


@pytest.mark.parametrize(
    "model, lam, mu, count",
    [
        ("ssvt", "2,1", "4,4,2,1", 11),
        ("ssyt", "2,1", "4,4,3,3,1", 8),
        ("paths", "0", "0", 1),
        ("subsets", "2,1", "4,4,3,3,1", 8),
        ("paths", "2,1", "4,4,3,3,1", 8),
        ("ssyt", "2,2", "3,1", 0),
    ],
)
def test_enumerate_counts(capsys, model, lam, mu, count):
    code, out, _ = run(capsys, "enumerate", "--model", model, "--lambda", lam, "--mu", mu, "--count-only")
    assert code == 0 and out == f"{count}\n"


def test_enumerate_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "ssvt", "--lambda", "2,1", "--mu", "3,3,1")
    assert out.splitlines() == ["11/2", "1{1,2}/2", "12/2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--model", "ssyt", "--lambda", "1,1,1", "--mu", "2,1"],
        ["enumerate", "--model", "paths", "--lambda", "3", "--mu", "2,1"],
        ["enumerate", "--model", "subsets", "--lambda", "1,2", "--mu", "2,2"],
        ["graph", "--model", "ssyt", "--lambda", "2,2", "--mu", "3,1"],
    ],
)
def test_enumerate_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--model", "pipes", "--lambda", "1", "--mu", "1"])
    assert exc.value.code == 2


@pytest.mark.parametrize("model", ["ssyt", "paths", "subsets"])
def test_graph_counts(capsys, model):
    code, out, _ = run(capsys, "graph", "--model", model, "--lambda", "2,1", "--mu", "4,4,3,3,1")
    assert code == 0
    assert out.startswith("digraph ladder {") and out.rstrip().endswith("}")
    assert len(re.findall(r"^\s+n\d+ \[label=", out, re.M)) == 8
    assert len(re.findall(r"->", out)) == 10


def test_graph_single_node(capsys):
    code, out, _ = run(capsys, "graph", "--model", "paths", "--lambda", "2,1", "--mu", "2,1", "--name", "g")
    assert out == 'digraph g {\n  n0 [label="()"];\n}\n'


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--d", "2", "--suite", "all")
    assert code == 0 and out.rstrip().endswith("Gr(2,5): pass")
    code, out, _ = run(capsys, "verify", "--n", "6", "--d", "3", "--suite", "oracles")
    assert code == 0 and "oracles.union_and_nsum: pass (400 checked)" in out
    code, out, _ = run(capsys, "verify", "--n", "4", "--d", "2", "--suite", "bijections")
    assert code == 0 and "FAIL" not in out
    assert run(capsys, "verify", "--n", "3", "--d", "3")[0] == 2


def test_verify_reports_failure(capsys, monkeypatch):
    import schubrest.cli as cli

    def broken(a, b):
        return LaurentPolynomial.zero(a.n)

    monkeypatch.setattr(cli, "restrict_k_via_nsum", broken)
    code, out, _ = run(capsys, "verify", "--n", "4", "--d", "2", "--suite", "oracles", "--max-dump", "1")
    assert code == 1
    assert "oracles.union_and_nsum: FAIL" in out
    assert out.count("counterexample:") == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schubrest", "enumerate", "--model", "ssyt", "--lambda", "2,1", "--mu", "4,4,3,3,1", "--count-only"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "8\n"
