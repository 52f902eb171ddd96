"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from girthcodes import acceptance
from girthcodes.cli import main
from girthcodes.graph6 import encode_graph6, parse_graph6


@pytest.fixture
def report(capsys):
    def emit(check: acceptance.Check) -> None:
        with capsys.disabled():
            print("\n" + check.line())
        assert check.passed, check.detail

    return emit


def test_criterion_1_exact_values(report):
    check = acceptance.check_exact_values(timeout=1800)
    expected = {(name, mode): value for name, _, mode, value in acceptance.KNOWN_VALUES}
    assert {(r["graph"], r["mode"]): r["found"] for r in check.rows} == expected
    report(check)


def test_criterion_2_construction_soundness(report):
    report(acceptance.check_constructions(count=1000, max_n=16))


def test_criterion_3_characterizations(report):
    report(acceptance.check_characterizations())


def test_criterion_4_oracle_equivalence(report):
    report(acceptance.check_oracle(count=200, max_n=8))


def test_criterion_5_bound_sandwich(report):
    report(acceptance.check_sandwich())


def test_criterion_6_cubic_alpha_informational(report):
    check = acceptance.check_cubic_alpha()
    assert len(check.rows) == 3
    report(check)


def test_criterion_7_graph6_roundtrip(report):
    check = acceptance.check_graph6(count=1000, max_n=62)
    # independent encoder for the same kind of samples
    rng = random.Random(7)
    for _ in range(200):
        g = acceptance.random_small_graph(rng, 62)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        text = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert encode_graph6(g) == text and parse_graph6(text) == g
    report(check)


def test_reproduce_command(capsys):
    code = main(["reproduce"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("PASS [") == 7 and "FAIL" not in out
    for name in ("C6", "C8", "C7", "H14", "G12", "P10", "flower(6,2)", "flower(5,2)", "G11^2"):
        assert name in out
