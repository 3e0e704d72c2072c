import json

import pytest

from mobiustri.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_methods_agree(capsys):
    for method in ("closed", "recurrence", "brute"):
        code, out, _ = run(capsys, "count", "--n", "4", "--method", method)
        assert code == 0 and out == "84\n"


def test_count_default_method_is_closed(capsys):
    code, out, _ = run(capsys, "count", "--n", "10")
    assert code == 0 and out == "310764\n"


def test_brute_force_refuses_large_n(capsys):
    code, out, err = run(capsys, "count", "--n", "7", "--method", "brute")
    assert code == 1 and out == ""
    assert "force" in err


def test_brute_force_override(capsys):
    code, out, _ = run(capsys, "count", "--n", "7", "--method", "brute",
                       "--force")
    assert code == 0 and out == "5020\n"


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    assert code == 0
    blobs = json.loads(out)
    assert len(blobs) == 6
    assert all(blob["n"] == 2 and len(blob["arcs"]) == 2 for blob in blobs)


def test_arcs_json(capsys):
    code, out, _ = run(capsys, "arcs", "--n", "3")
    assert code == 0
    arcs = json.loads(out)
    assert len(arcs) == 13
    assert {"type": "core"} in arcs


def test_flip_graph_dot(capsys):
    code, out, _ = run(capsys, "flip-graph", "--n", "2")
    assert code == 0
    assert out.startswith("graph flip_graph_n2 {")
    assert out.rstrip().endswith("}")


def test_flip_graph_json(capsys):
    code, out, _ = run(capsys, "flip-graph", "--n", "2", "--format", "json")
    blob = json.loads(out)
    assert code == 0
    assert blob["vertex_count"] == 6
    assert len(blob["edges"]) == 6


def test_mutate_transcript(capsys):
    code, out, _ = run(capsys, "mutate", "--n", "2", "--seq", "1,2,1")
    assert code == 0
    steps = json.loads(out)
    assert len(steps) == 3
    for step in steps:
        assert set(step) == {"arc", "relation", "variable"}
        assert step["relation"] in ("ptolemy", "anti_self_folded",
                                    "one_sided_curve", "crosscap_quad")
        assert step["variable"]["numerator"]


def test_mutate_bad_slot(capsys):
    code, out, err = run(capsys, "mutate", "--n", "2", "--seq", "1,5")
    assert code == 1 and "slot" in err


def test_verify_report(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert all(line.endswith("=> ok") for line in lines)


def test_usage_errors_exit_2(capsys):
    for argv in (["bogus"], ["count"], ["count", "--n", "0"],
                 ["mutate", "--n", "2", "--seq", "a,b"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_deterministic_output(capsys):
    first = run(capsys, "enumerate", "--n", "3")
    second = run(capsys, "enumerate", "--n", "3")
    assert first == second
