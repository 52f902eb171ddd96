from __future__ import annotations

import time

import pytest
from hypothesis import given, settings

from girthcodes import codes, families
from girthcodes.exact import (
    analytic_lower_bound,
    constraints,
    min_dominating,
    min_identifying_code,
    min_locating_dominating,
    naive_minimum,
    solve,
)
from girthcodes.graph import Graph

from strategies import graphs


@pytest.mark.parametrize(
    "g, mode, expected",
    [
        (families.cycle(6), "dom", 2),
        (Graph(1), "dom", 1),
        (families.petersen(), "dom", 3),
        (families.heawood(), "ld", 6),
        (families.cycle(6), "ld", 3),
        (families.cycle(8), "ld", 4),
        (families.petersen(), "ld", 4),
        (families.g12(), "id", 6),
        (families.cycle(7), "id", 5),
        (families.petersen(), "id", 4),
        (families.flower(5, 2), "id", 6),
        (families.flower(6, 2), "ld", 6),
        (families.cycle(5), "id", 3),
    ],
)
def test_known_values(g, mode, expected):
    r = solve(g, mode)
    assert r.proved and r.optimum == expected
    assert codes.validate(g, mode, r.witness)
    if g.n <= 12:
        assert naive_minimum(g, mode)[0] == expected


def test_g11_values():
    g = families.g11(2)
    ld = min_locating_dominating(g)
    assert ld.optimum == 8 and codes.is_locating_dominating(g, ld.witness)
    ident = min_identifying_code(g)
    assert ident.optimum == 10 and codes.is_identifying_code(g, ident.witness)


def test_not_identifiable():
    r = min_identifying_code(Graph(2, [(0, 1)]))
    assert not r.identifiable and r.optimum is None and r.witness is None
    assert naive_minimum(Graph(2, [(0, 1)]), "id") is None


def test_empty_graph():
    for mode in ("dom", "ld", "id"):
        r = solve(Graph(0), mode)
        assert r.optimum == 0 and r.witness == frozenset()


def test_timeout_reports_bounds():
    g = families.g11(3)
    start = time.monotonic()
    r = min_identifying_code(g, timeout=0.05)
    assert time.monotonic() - start < 5
    assert r.lower_bound <= r.upper_bound
    assert codes.is_identifying_code(g, r.witness)
    if not r.proved:
        assert r.to_json()["optimum"] is None


def test_deterministic():
    g = families.heawood()
    a, b = solve(g, "ld"), solve(g, "ld")
    assert a.witness == b.witness and a.nodes_expanded == b.nodes_expanded


def test_constraints_are_minimal():
    cons = constraints(families.petersen(), "id")
    for a in cons:
        for b in cons:
            assert a == b or a & b != a


def test_analytic_lower_bounds():
    assert analytic_lower_bound(families.petersen(), "ld") == 4
    assert analytic_lower_bound(families.heawood(), "id") == 6
    assert analytic_lower_bound(Graph(3), "ld") == 3
    with pytest.raises(ValueError):
        solve(Graph(1), "nope")


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_matches_naive_enumeration(g):
    for mode in ("dom", "ld", "id"):
        r = solve(g, mode)
        naive = naive_minimum(g, mode)
        if naive is None:
            assert not r.identifiable
            continue
        assert r.optimum == naive[0]
        assert codes.validate(g, mode, r.witness)
        assert r.lower_bound >= analytic_lower_bound(g, mode) or r.proved


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_parameter_chain(g):
    dom = min_dominating(g).optimum
    ld = min_locating_dominating(g).optimum
    assert dom <= ld
    ident = min_identifying_code(g)
    if ident.identifiable:
        assert ld <= ident.optimum
