import io
import json
import subprocess
import sys

import pytest

from fockcrystal.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_wall_cross_example():
    code, out, _ = call("wall-cross", "--e", "2", "--s", "0,0", "--m", "0,-1", "--m2", "0,1", "--lp", "[[1],[2]]")
    assert code == 0
    assert out.strip() == "[[2],[1]]"
    code, out, _ = call(
        "wall-cross", "--e", "2", "--s", "0,0", "--m", "0,-1", "--m2", "0,1", "--lp", "[[1],[2]]", "--format", "text"
    )
    assert out.splitlines() == ["(2, 1)", "walls crossed: (1,2,0)"]


def test_highest_weight_example():
    code, out, _ = call("highest-weight", "--e", "3", "--s", "0,0", "--m", "1,3", "--lp", "[[3,1],[2,2,1,1]]")
    assert (code, out.strip()) == (0, "true")
    code, out, _ = call("highest-weight", "--e", "3", "--s", "0,0", "--m", "0,4", "--lp", "[[3,1],[2,2,1,1]]")
    assert (code, out.strip()) == (0, "false")


def test_highest_weight_trace_json():
    code, out, _ = call(
        "highest-weight", "--e", "3", "--s", "0,0", "--m", "1,3", "--lp", "[[3,1],[2,2,1,1]]",
        "--pad", "0", "--format", "json",
    )
    data = json.loads(out)
    assert data["highest_weight"] is True
    assert data["trace"][0] == [[-2, 0, 3], [-2, -1, 1, 2, 4, 5]]


def test_chambers_example():
    code, out, _ = call("chambers", "--e", "2", "--s", "0,0", "--n", "3", "--l", "2", "--m=0,-1")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "3 walls"
    assert "4 chambers" in lines
    assert lines[-1] == "m lies in +--"


def test_graph_formats():
    code, out, _ = call("graph", "--e", "2", "--s", "0,0", "--m=0,-1", "--n", "1", "--format", "json")
    assert json.loads(out)["edges"] == [{"src": [[], []], "dst": [[1], []], "color": 0}]
    code, out, _ = call("graph", "--e", "2", "--s", "0,0", "--m=0,-1", "--n", "2", "--format", "dot")
    assert out.startswith("digraph") and 'label="1"' in out


def test_wc_forms_agree():
    a = call("wc", "--kappa", "1/2", "--s", "0,0", "--kappa2", "1/2", "--s2", "0,2", "--lp", "[[1],[2]]", "--format", "json")
    b = call(
        "wc", "--params", '{"kappa": "1/2", "s": ["0", "0"]}', "--params2", '{"kappa": "1/2", "s": ["0", "2"]}',
        "--lp", "[[1],[2]]", "--format", "json",
    )
    assert a == b and json.loads(a[1]) == [[2], [1]]


def test_symbol():
    code, out, _ = call("symbol", "--s", "0,3", "--lp", "[[6,5,5,4],[5,5,3,3,2]]", "--format", "json")
    assert json.loads(out) == {"rows": [[-4, 1, 3, 4, 6], [-4, -3, -2, 1, 3, 4, 7, 8]], "width": 7}


def test_selftest_passes():
    code, out, _ = call("selftest")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


@pytest.mark.parametrize(
    "argv",
    [
        ("wall-cross", "--e", "2", "--s", "0,0", "--m", "0,2", "--m2", "0,1", "--lp", "[[1],[2]]"),
        ("wc", "--kappa", "1/2", "--s", "0,0", "--kappa2", "1/3", "--s2", "0,0", "--lp", "[[1],[2]]"),
        ("graph", "--e", "2", "--s", "0,0,0", "--m", "0,1/2", "--n", "2"),
        ("chambers", "--e", "2", "--s", "0,0", "--n", "3", "--l", "3"),
    ],
)
def test_configuration_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert err.startswith("configuration error")


@pytest.mark.parametrize(
    "argv",
    [
        ("wall-cross", "--e", "2", "--s", "0,0"),
        ("graph", "--e", "1", "--s", "0", "--m", "0", "--n", "1"),
        ("graph", "--e", "2", "--s", "0,1/2", "--m", "0,0", "--n", "1"),
        ("symbol", "--s", "0", "--lp", "[[1,2]]"),
        ("wc", "--lp", "[[1],[2]]"),
        ("frobnicate",),
    ],
)
def test_parse_errors_exit_1(argv):
    assert call(*argv)[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fockcrystal", "symbol", "--s", "0,3", "--lp", "[[3,1],[2,2,1,1]]"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.split("\n")[1].split() == ["-2", "0", "3"]
