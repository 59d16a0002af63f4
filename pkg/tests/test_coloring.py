import json
from itertools import combinations

import pytest
from hypothesis import given

from conftest import connected_graphs, connected_multigraphs
from oracles import brute_chromatic_index
from rainbowdc.coloring import (EdgeColoring, chromatic_index_exact, class_one_sufficient, is_overfull,
                                is_proper, shannon_proper_coloring, vizing_proper_coloring)
from rainbowdc.config import Budgets
from rainbowdc.families import complete, cycle, path, petersen, star, wheel
from rainbowdc.graph import Graph, GraphError, degree_profile


def conflict_free(g, colors):
    """Independent scan: no two edges sharing an endpoint have the same color."""
    for i, j in combinations(range(g.m), 2):
        if set(g.edges[i]) & set(g.edges[j]) and colors[i] == colors[j]:
            return False
    return True


FAT_TRIANGLE = Graph(3, ((0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)))


def test_vizing_examples():
    assert vizing_proper_coloring(cycle(6)).used == 2
    assert vizing_proper_coloring(cycle(5)).used == 3
    c = vizing_proper_coloring(petersen())
    assert c.used == 4 and conflict_free(petersen(), c.colors)
    with pytest.raises(GraphError):
        vizing_proper_coloring(FAT_TRIANGLE)


def test_shannon_examples():
    c = shannon_proper_coloring(FAT_TRIANGLE)
    assert c.used <= 6 and conflict_free(FAT_TRIANGLE, c.colors)
    assert chromatic_index_exact(FAT_TRIANGLE).value == 6
    assert shannon_proper_coloring(cycle(4)).used == 2
    triple = Graph(2, ((0, 1),) * 3)
    assert shannon_proper_coloring(triple).used == 3


def test_chromatic_index_examples():
    assert chromatic_index_exact(complete(4)).value == 3
    res = chromatic_index_exact(petersen())
    assert res.value == 4 and res.exact and conflict_free(petersen(), res.witness.colors)
    assert chromatic_index_exact(star(5)).value == 4
    assert chromatic_index_exact(wheel(6)).value == 5


def test_chromatic_index_budget_gives_bracket():
    res = chromatic_index_exact(petersen(), Budgets(max_chi_edges=10))
    assert not res.exact and (res.lower, res.upper) == (3, 4)
    assert res.to_json() == [3, 4]
    fat = chromatic_index_exact(FAT_TRIANGLE, Budgets(max_chi_edges=3))
    assert (fat.lower, fat.upper) == (4, 6)


def test_class_one_examples():
    assert class_one_sufficient(wheel(5))
    assert chromatic_index_exact(wheel(5)).value == 4
    assert not class_one_sufficient(cycle(5))
    assert class_one_sufficient(path(4))
    assert chromatic_index_exact(path(4)).value == 2


def test_overfull_examples():
    assert is_overfull(complete(5))
    assert not is_overfull(complete(4))
    assert is_overfull(cycle(5))


def test_coloring_json_round_trip():
    g = wheel(5)
    c = vizing_proper_coloring(g)
    obj = json.loads(c.dumps(g))
    assert obj["k"] == c.k and [e[:2] for e in obj["edges"]] == [list(e) for e in g.edges]
    assert EdgeColoring.from_json(obj, g) == c
    with pytest.raises(GraphError):
        EdgeColoring.from_json(obj, cycle(4))
    with pytest.raises(GraphError):
        EdgeColoring(2, (1, 3))


def test_vizing_bound_exhaustive(corpus7):
    for g in corpus7:
        c = vizing_proper_coloring(g)
        assert c.used <= degree_profile(g).max_degree + 1
        assert conflict_free(g, c.colors) and is_proper(g, c)


@given(connected_graphs(min_n=8, max_n=8, extra_max=20))
def test_vizing_bound_order_eight(g):
    c = vizing_proper_coloring(g)
    assert c.used <= degree_profile(g).max_degree + 1 and conflict_free(g, c.colors)


@given(connected_multigraphs(max_n=8, max_degree=6))
def test_shannon_bound_random_multigraphs(g):
    c = shannon_proper_coloring(g)
    assert c.used <= 3 * degree_profile(g).max_degree // 2
    assert conflict_free(g, c.colors)


def test_chromatic_index_matches_brute_force(corpus6):
    for g in corpus6:
        if g.m > 10:
            continue
        assert chromatic_index_exact(g).value == brute_chromatic_index(g.n, list(g.edges))


@given(connected_multigraphs(max_n=5, max_degree=4))
def test_chromatic_index_multigraph_brute_force(g):
    if g.m <= 10:
        res = chromatic_index_exact(g)
        assert res.value == brute_chromatic_index(g.n, list(g.edges))
        assert conflict_free(g, res.witness.colors)


def test_class_one_and_overfull_agree_with_exact(corpus7):
    for g in corpus7:
        delta = degree_profile(g).max_degree
        if not (class_one_sufficient(g) or is_overfull(g)):
            continue
        chi = chromatic_index_exact(g).value
        if class_one_sufficient(g):
            assert chi == delta
        if is_overfull(g):
            assert chi == delta + 1
