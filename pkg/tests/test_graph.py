from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given

from girthcodes import families
from girthcodes.errors import HypothesisError
from girthcodes.graph import Graph, degree_profile, find_twins, girth, is_identifiable, require_girth5, to_dot

from strategies import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_edges_are_normalised():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.edge_count == 2


@pytest.mark.parametrize("edge", [(0, 0), (0, 3), (-1, 1)])
def test_bad_edges_rejected(edge):
    with pytest.raises(ValueError):
        Graph(3, [edge])


def test_labeled_edges():
    g = Graph.from_labeled_edges([("a", "b"), ("b", "c")], vertices=["z"])
    assert g.n == 4
    assert g.labels[0] == "z"
    assert g.has_edge(1, 2) and g.has_edge(2, 3)


@pytest.mark.parametrize(
    "g, expected",
    [
        (families.cycle(5), 5),
        (families.heawood(), 6),
        (families.g12(), 5),
        (families.petersen(), 5),
        (families.cycle(3), 3),
        (families.path(6), math.inf),
        (Graph(0), math.inf),
    ],
)
def test_girth_examples(g, expected):
    assert girth(g) == expected


@given(graphs(max_n=10))
def test_girth_matches_networkx(g):
    assert girth(g) == nx.girth(to_nx(g))


def test_degree_profile():
    assert degree_profile(families.petersen()) == (3, 3, [3] * 10)
    assert degree_profile(families.star(3)) == (1, 3, [3, 1, 1, 1])
    lo, hi, degs = degree_profile(families.g11(2))
    assert (lo, hi) == (2, 3)
    assert degs[0] == 2 and degs.count(2) == 1


def test_twins():
    k2 = Graph(2, [(0, 1)])
    assert not is_identifiable(k2)
    assert find_twins(k2) == (0, 1)
    assert is_identifiable(families.cycle(5))
    assert is_identifiable(families.cycle(7))
    # isolated vertices are never twins of each other
    assert is_identifiable(Graph(3))


@given(graphs())
def test_twins_match_definition(g):
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if g.closed_neighborhood(u) == g.closed_neighborhood(v)]
    assert find_twins(g) == (min(pairs) if pairs else None)


@given(graphs())
def test_components_partition(g):
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert len(comps) == nx.number_connected_components(to_nx(g)) if g.n else comps == []


def test_require_girth5():
    require_girth5(families.petersen())
    with pytest.raises(HypothesisError) as err:
        require_girth5(families.cycle(4))
    assert err.value.hypothesis == "girth>=5"


def test_dot_highlight():
    dot = to_dot(families.cycle(5), highlight=[2])
    assert dot.count("fillcolor=black") == 1
    assert "0 -- 1" in dot
