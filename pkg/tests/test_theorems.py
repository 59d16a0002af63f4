import pytest

from rainbowdc.config import Budgets
from rainbowdc.corpus import corpus_lines, load
from rainbowdc.families import complete, complete_multipartite, cycle, grid, path, petersen, star, wheel
from rainbowdc.graph import Graph, GraphError, complement
from rainbowdc.connectivity import local_edge_connectivity
from rainbowdc.io import from_graph6, to_graph6
from rainbowdc.rainbow import rd_exact
from rainbowdc.theorems import (ScanOptions, characterize_rd_1, characterize_rd_2, characterize_rd_n_minus_1,
                                characterize_rd_n_minus_2, conjecture_scan, multipartite_formula,
                                ng_extremal_condition, nordhaus_gaddum_check, ng_scan,
                                odd_regular_equivalence, scan_one)

BOWTIE = Graph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)))


def k5_minus_edge():
    return Graph(5, tuple(e for e in complete(5).edges if e != (0, 1)))


def test_low_characterization_examples():
    assert characterize_rd_1(path(5))
    assert characterize_rd_2(BOWTIE) and not characterize_rd_1(BOWTIE)
    assert not characterize_rd_1(complete(4)) and not characterize_rd_2(complete(4))
    assert not characterize_rd_2(path(5))


def test_n_minus_1_examples():
    for n in range(3, 7):
        assert characterize_rd_n_minus_1(complete(n))
    for n in range(5, 9):
        assert not characterize_rd_n_minus_1(wheel(n))
    g = k5_minus_edge()
    assert characterize_rd_n_minus_1(g) and rd_exact(g).value == 4


def test_n_minus_2_examples():
    assert characterize_rd_n_minus_2(wheel(5)) == (True, "i")
    assert rd_exact(wheel(5)).value == 3
    assert characterize_rd_n_minus_2(cycle(4)) == (True, "ii")
    assert rd_exact(cycle(4)).value == 2
    assert characterize_rd_n_minus_2(cycle(6)) == (False, None)
    with pytest.raises(GraphError):
        characterize_rd_n_minus_2(cycle(3))


def test_ng_examples():
    rec = nordhaus_gaddum_check(path(4))
    assert (rec.rd, rec.rd_complement) == (1, 1) and rec.rd + rec.rd_complement == 2
    assert rec.consistent
    rec = nordhaus_gaddum_check(cycle(5))
    assert (rec.rd, rec.rd_complement) == (2, 2) and rec.lower_ok and rec.upper_ok
    assert not rec.extremal and rec.consistent
    with pytest.raises(GraphError):
        nordhaus_gaddum_check(complete(4))
    assert rec.to_json()["consistent"] is True


def test_ng_extremal_example():
    g = from_graph6("EJwG")
    rec = nordhaus_gaddum_check(g)
    assert (rec.rd, rec.rd_complement) == (3, 4) and rec.extremal
    assert ng_extremal_condition(g) or ng_extremal_condition(complement(g))
    # no graph on five vertices reaches the upper sum
    assert not any(r.extremal for r in ng_scan(load("connected_n5")))


def test_odd_regular_examples():
    rec = odd_regular_equivalence(complete(4))
    assert (rec.chromatic_index, rec.rd) == (3, 3) and rec.equivalence_holds and rec.bracket_holds
    rec = odd_regular_equivalence(petersen())
    assert (rec.chromatic_index, rec.rd) == (4, 4) and rec.equivalence_holds
    rec = odd_regular_equivalence(complete_multipartite(3, 3))
    assert (rec.chromatic_index, rec.rd) == (3, 3) and rec.equivalence_holds
    with pytest.raises(GraphError):
        odd_regular_equivalence(cycle(6))
    cubic_eight = Graph(8, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 6),
                                  (2, 7), (6, 7), (4, 6), (5, 7)))
    assert odd_regular_equivalence(cubic_eight).equivalence_holds


@pytest.mark.parametrize("parts", [(2, 3), (3, 3), (1, 2, 2), (1, 1, 3), (2, 2, 2), (1, 4), (1, 2, 3)])
def test_multipartite_formula_matches_exact(parts):
    assert rd_exact(complete_multipartite(*parts)).value == multipartite_formula(parts)


def test_multipartite_formula_values():
    assert multipartite_formula((2, 3)) == 3
    assert multipartite_formula((3, 1, 2)) == 4


def test_scan_examples():
    rec = scan_one(to_graph6(petersen()))
    assert rec["rd"] == 4 and rec["lambda_plus"] == 3 and rec["violations"] == []
    assert rec["chain_ok"] is True
    rec = scan_one(to_graph6(petersen()), ScanOptions(mode="witness"))
    assert rec["rd_upper"] == 4 and rec["status"] == "resolved"
    rep = conjecture_scan(corpus_lines("connected_n5"), corpus="connected_n5")
    assert rep.summary() == {"corpus": "connected_n5", "graphs": 21, "resolved": 21,
                             "unresolved": 0, "violations": 0}


def test_scan_budget_is_unresolved_not_violation():
    opts = ScanOptions(budgets=Budgets(max_nodes=1), check_chi=False)
    rep = conjecture_scan([to_graph6(petersen()), to_graph6(complete(6))], opts)
    assert rep.violations == []
    assert rep.unresolved >= 1


def test_scan_records_reproducible_and_parallel_ordered():
    codes = corpus_lines("connected_n5")
    serial = conjecture_scan(codes)
    parallel = conjecture_scan(codes, workers=2)
    assert serial.records == parallel.records


def test_scan_skips_disconnected():
    rec = scan_one(to_graph6(Graph(3, ((0, 1),))))
    assert rec["status"] == "skipped"


def test_grid_values():
    for n in range(3, 7):
        # the two middle-rung vertices are joined by three edge-disjoint paths
        g = grid(2, n)
        mid = n // 2
        assert local_edge_connectivity(g, mid, n + mid) == 3
        assert rd_exact(g).value == 3
    assert rd_exact(grid(2, 2)).value == 2
    assert rd_exact(grid(3, 4)).value == 3
    assert rd_exact(grid(3, 5)).value == 3
    assert rd_exact(star(5)).value == 1
