from __future__ import annotations

import io
import json

import pytest

from girthcodes import families
from girthcodes.cli import main
from girthcodes.graph6 import encode_graph6, parse_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def last_json(text):
    return json.loads(text.strip().splitlines()[-1])


G12 = encode_graph6(families.g12())


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--family", "heawood")
    assert code == 0
    assert parse_graph6(out.strip()).n == 14
    code, out, _ = run(capsys, "generate", "--family", "g11", "--k", "3", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["n"] == 34
    code, out, _ = run(capsys, "generate", "--family", "random", "--n", "15", "--seed", "4", "--saturate")
    assert parse_graph6(out.strip()).girth >= 5


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--mode", "id", "--graph", G12)
    data = json.loads(out)
    assert code == 0 and data["optimum"] == 6 and data["proved"]
    assert set(data) >= {"optimum", "witness", "nodes_expanded", "proved", "schema"}


def test_solve_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(encode_graph6(families.cycle(6)) + "\n"))
    code, out, _ = run(capsys, "solve", "--mode", "ld")
    assert json.loads(out)["optimum"] == 3


def test_solve_timeout_from_env(capsys, monkeypatch):
    monkeypatch.setenv("GIRTHCODES_TIMEOUT", "0.01")
    code, out, _ = run(capsys, "solve", "--mode", "id", "--graph", encode_graph6(families.g11(3)))
    data = json.loads(out)
    assert data["lower_bound"] <= data["upper_bound"]
    assert code == (0 if data["proved"] else 1)


def test_validate_exit_codes(capsys):
    code, out, _ = run(capsys, "validate", "--mode", "id", "--graph", G12, "--set", "0,2,5,6,7,10")
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run(capsys, "validate", "--mode", "ld", "--graph", G12, "--set", "0,3", "--fast")
    data = json.loads(out)
    assert code == 1 and data["violation"]["kind"] == "undominated-vertex"


def test_cover(capsys):
    code, out, _ = run(capsys, "cover", "--graph", encode_graph6(families.path(11)), "--normalize", "ld")
    lines = out.strip().splitlines()
    assert lines[:2] == ["0,1,2,3,4,5", "6,7,8,9,10"]
    data = last_json(out)
    assert data["objective_ld"] == 0 and data["alpha"] == "2/11"


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--method", "id-5-7", "--graph", encode_graph6(families.cycle(7)))
    data = json.loads(out)
    assert code == 0 and data["size"] == 5 and data["valid"] and not data["repaired"]
    code, out, _ = run(capsys, "construct", "--method", "ld-half", "--graph", encode_graph6(families.cycle(6)),
                       "--format", "dot")
    assert out.count("fillcolor=black") == 3


def test_hypothesis_error_names_hypothesis(capsys):
    code, _, err = run(capsys, "construct", "--method", "d-of-s", "--graph", encode_graph6(families.cycle(4)))
    assert code == 2 and "girth>=5" in err


def test_bad_graph6(capsys):
    code, _, err = run(capsys, "solve", "--mode", "ld", "--graph", "K~")
    assert code == 2 and "byte" in err


def test_unknown_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--bogus"])
    assert exc.value.code == 2


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--graph", G12, "--exact")
    data = json.loads(out)
    assert code == 0
    assert data["exact"]["id"]["optimum"] == 6 and data["exact"]["id"]["violations"] == []
    assert data["ld_lower"] == "4"
    code, out, _ = run(capsys, "report", "--graph", G12, "--alpha", "1/12")
    assert json.loads(out)["alpha"] == "1/12"


def test_output_is_deterministic(capsys):
    outs = set()
    for _ in range(2):
        for argv in (
            ["solve", "--mode", "ld", "--graph", G12],
            ["construct", "--method", "c-of-s", "--graph", G12],
            ["report", "--graph", G12],
        ):
            outs.add((tuple(argv), run(capsys, *argv)[1]))
    assert len(outs) == 3
