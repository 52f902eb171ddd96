from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from girthcodes import codes, families
from girthcodes.constructions import (
    c_of_s,
    id_five_sevenths,
    id_from_cover,
    ld_from_cover,
    ld_half,
    verify_or_repair,
)
from girthcodes.errors import HypothesisError, InvalidCoverError, NotIdentifiableError
from girthcodes.graph import Graph
from girthcodes.pathcover import PathCover, greedy_cover, random_cover

from strategies import girth5_graphs, graphs


def single_path(g: Graph) -> PathCover:
    return PathCover.of([range(g.n)], g.n)


def test_ld_half_examples():
    r = ld_half(families.cycle(6))
    assert r.code == {1, 3, 5} and r.valid and not r.repaired
    assert ld_half(families.cycle(8)).size == 4
    r = ld_half(families.flower(6, 2))
    assert r.size <= 6 and codes.is_locating_dominating(families.flower(6, 2), r.code)
    assert r.bound_claim == Fraction(13, 2)


def test_ld_from_cover_examples():
    assert ld_from_cover(families.path(5), single_path(families.path(5))).code == {1, 3}
    assert ld_from_cover(families.path(6), single_path(families.path(6))).code == {1, 3, 5}
    r = ld_from_cover(families.path(4), single_path(families.path(4)))
    assert r.code == {1, 3} and r.assignment == {0: 1}


def test_ld_from_cover_errors():
    with pytest.raises(HypothesisError):
        ld_from_cover(families.cycle(4), single_path(families.cycle(4)))
    with pytest.raises(InvalidCoverError):
        ld_from_cover(families.cycle(6), PathCover.of([[0, 2, 4, 1, 3, 5]], 6))


def test_id_five_sevenths_examples():
    r = id_five_sevenths(families.cycle(7))
    assert r.size == 5 and r.valid and not r.repaired
    r = id_five_sevenths(families.cycle(8))
    assert r.code == {0, 2, 4, 6}
    f52 = families.flower(5, 2)
    r = id_five_sevenths(f52)
    assert r.size <= 7 and codes.is_identifying_code(f52, r.code) and not r.repaired
    with pytest.raises(NotIdentifiableError):
        id_five_sevenths(Graph(2, [(0, 1)]))


def test_c9_component():
    r = id_five_sevenths(families.cycle(9))
    assert r.size == 6 and not r.repaired


def test_id_from_cover_examples():
    c5 = families.cycle(5)
    r = id_from_cover(c5, single_path(c5))
    assert r.code == {1, 2, 3} and r.valid
    assert id_from_cover(Graph(1), single_path(Graph(1))).code == {0}
    c8 = families.cycle(8)
    assert c_of_s(c8, single_path(c8))[0] == {1, 2, 3, 5, 6, 7}
    r = id_from_cover(c8, single_path(c8))
    assert r.size == 5 and r.valid and not r.repaired


def test_id_from_cover_errors():
    with pytest.raises(HypothesisError):
        id_from_cover(families.cycle(4), single_path(families.cycle(4)))
    with pytest.raises(NotIdentifiableError):
        id_from_cover(Graph(2, [(0, 1)]), single_path(Graph(2, [(0, 1)])))


def test_adjacent_singletons_are_repaired():
    # two adjacent 1-paths form a code component of order two
    g = families.path(5)
    r = id_from_cover(g, PathCover.of([[0], [1], [2, 3, 4]], 5))
    assert r.valid and not r.repaired
    assert r.size <= (3 * 5 + 4 * 3) / 5


def test_s3_tail_neighbour_split():
    # removing x_{p-3} can leave a neighbouring code component of order two
    g = Graph(6, [(0, 1), (0, 5), (1, 3), (2, 3), (3, 4)])
    s = PathCover.of([[0, 5], [1, 3, 4], [2]], 6)
    r = id_from_cover(g, s)
    assert r.valid and not r.repaired and r.size == 5


def test_verify_or_repair():
    c6 = families.cycle(6)
    assert verify_or_repair(c6, {0, 2, 4}, "ld") == {0, 2, 4}
    fixed = verify_or_repair(families.cycle(5), {0, 1}, "id")
    assert {0, 1} <= fixed and len(fixed) <= 5
    assert codes.is_identifying_code(families.cycle(5), fixed)
    fixed = verify_or_repair(families.cycle(7), set(), "ld")
    assert codes.is_locating_dominating(families.cycle(7), fixed)
    with pytest.raises(NotIdentifiableError):
        verify_or_repair(Graph(2, [(0, 1)]), set(), "id")


@given(graphs(max_n=9), st.sampled_from(["dom", "ld", "id"]))
def test_verify_or_repair_always_valid(g, mode):
    if mode == "id" and g.twins is not None:
        return
    fixed = verify_or_repair(g, set(), mode)
    assert codes.validate(g, mode, fixed)


@settings(max_examples=200)
@given(girth5_graphs(max_n=16), st.integers(0, 10**6))
def test_ld_from_cover_always_valid(g, seed):
    s = random_cover(g, random.Random(seed))
    r = ld_from_cover(g, s)
    assert not r.repaired
    assert r.size <= (2 * g.n + 4 * len(s)) / Fraction(5)
    forced = codes.unique_dominators(g, r.code)
    assert all(r.assignment.get(x) == t for x, t in forced.items())


@settings(max_examples=200)
@given(girth5_graphs(max_n=16), st.integers(0, 10**6))
def test_id_from_cover_always_valid(g, seed):
    if g.twins is not None:
        return
    s = random_cover(g, random.Random(seed))
    r = id_from_cover(g, s)
    assert not r.repaired
    assert r.size <= (3 + 4 * s.alpha) * g.n / 5
    assert codes.is_identifying_code(g, r.code)


@settings(max_examples=150)
@given(girth5_graphs(max_n=24, min_degree=2))
def test_half_and_five_sevenths(g):
    r = ld_half(g)
    assert r.hypotheses_met and not r.repaired and r.size <= g.n // 2
    r = id_five_sevenths(g)
    assert r.hypotheses_met and not r.repaired and r.size <= 5 * g.n // 7


@pytest.mark.parametrize(
    "make", [families.petersen, families.heawood, families.g12, families.p11, lambda: families.g11(3)]
)
def test_named_graphs(make):
    g = make()
    for r in (ld_half(g), ld_from_cover(g, greedy_cover(g))):
        assert codes.is_locating_dominating(g, r.code) and not r.repaired
    for r in (id_five_sevenths(g), id_from_cover(g, greedy_cover(g))):
        assert codes.is_identifying_code(g, r.code) and not r.repaired


def test_outside_hypotheses_is_repaired_not_refused():
    g = families.cycle(4)
    r = ld_half(g)
    assert not r.hypotheses_met
    assert codes.is_locating_dominating(g, r.code)
