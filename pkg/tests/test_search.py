from itertools import product

import pytest

from oracles import brute_canonical, nx_isomorphic, trigraph_saturated

from indsat_lab.constructions import (
    CLAW,
    PAW,
    claw_catalogue,
    complete_multipartite,
    cycle_graph,
    path_graph,
    table_trigraphs,
)
from indsat_lab.canon import canonical_form
from indsat_lab.graph import Graph, GuardError, Trigraph
from indsat_lab.saturation import verify_graph_saturated, verify_trigraph_saturated
from indsat_lab.search import (
    EXCEEDS_BUDGET,
    NONE_EXISTS,
    claw_degree_filter,
    enumerate_graphs,
    gray_classes,
    saturation_table,
    search_indsat,
    search_sis,
)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_enumeration_counts_match_brute_force(n, count):
    ours = list(enumerate_graphs(n))
    assert len(ours) == count
    brute = {brute_canonical(Graph.from_mask(n, m)) for m in range(1 << (n * (n - 1) // 2))}
    assert len(brute) == count
    assert {brute_canonical(g) for g in ours} == brute


def test_enumeration_filter_and_labeled_mode():
    assert list(enumerate_graphs(3, lambda g: g.min_degree >= 2)) == [Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])]
    assert sum(1 for _ in enumerate_graphs(4, dedup=False)) == 64
    with pytest.raises(GuardError):
        next(enumerate_graphs(8, dedup=False))
    with pytest.raises(GuardError):
        next(enumerate_graphs(11))


def test_gray_classes_are_isomorphism_classes():
    assert gray_classes(4, 2) == [0b11, 0b100001]
    assert len(gray_classes(5, 3)) == 4


@pytest.mark.parametrize(
    "n, h, budget, value",
    [(4, PAW, 3, 2), (5, PAW, 2, 1), (4, CLAW, 3, 3), (6, CLAW, 3, 3)],
)
def test_search_indsat_examples(n, h, budget, value):
    rep = search_indsat(n, h, budget)
    assert rep.result == value
    assert verify_trigraph_saturated(rep.certificate, h).saturated
    assert trigraph_saturated(rep.certificate, h)
    assert rep.nodes_explored > 0


def test_indsat_certificate_matches_table():
    cert = search_indsat(4, PAW, 3).certificate
    assert canonical_form(cert) == canonical_form(table_trigraphs("paw", 4))


def test_budget_monotonicity():
    assert search_indsat(4, PAW, 1).result == EXCEEDS_BUDGET
    assert search_indsat(4, PAW, 2).result == search_indsat(4, PAW, 4).result == 2


def test_parallel_matches_serial():
    serial = search_indsat(6, CLAW, 3, jobs=1)
    parallel = search_indsat(6, CLAW, 3, jobs=2)
    assert serial.result == parallel.result
    assert canonical_form(serial.certificate) == canonical_form(parallel.certificate)


def test_indsat_guards():
    with pytest.raises(GuardError):
        search_indsat(8, PAW, 2)
    with pytest.raises(GuardError):
        search_indsat(5, PAW, 5)


def test_saturation_table_matches_verifier():
    for n in (4, 5, 6):
        table = saturation_table(n, PAW)
        for mask in range(len(table)):
            assert bool(table[mask]) == verify_graph_saturated(Graph.from_mask(n, mask), PAW).saturated


def test_search_sis_paw_seven():
    rep = search_sis(7, PAW, 21)
    assert rep.result == 15
    assert nx_isomorphic(rep.certificate, complete_multipartite([1, 3, 3]))
    assert verify_graph_saturated(rep.certificate, PAW).saturated


def test_search_sis_outcomes():
    assert search_sis(4, PAW, 6).result == NONE_EXISTS
    assert search_sis(7, PAW, 14).result == EXCEEDS_BUDGET
    with pytest.raises(GuardError):
        search_sis(9, PAW, 10)


@pytest.mark.parametrize("n", range(1, 7))
def test_claw_pruning_is_sound(n):
    plain = search_sis(n, CLAW, n * (n - 1) // 2)
    pruned = search_sis(n, CLAW, n * (n - 1) // 2, prune=True)
    assert plain.result == pruned.result
    assert pruned.nodes_explored <= plain.nodes_explored


def test_claw_degree_filter():
    assert claw_degree_filter(claw_catalogue("H"))
    assert not claw_degree_filter(Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]))
    assert not claw_degree_filter(Graph.from_edges(2, [(0, 1)]))


@pytest.mark.slow
def test_no_claw_saturated_graph_on_eight_vertices():
    rep = search_sis(8, CLAW, 28, prune=True)
    assert rep.result == NONE_EXISTS


@pytest.mark.parametrize("h", [PAW, CLAW, cycle_graph(4), path_graph(4)], ids=["paw", "claw", "C4", "P4"])
def test_indsat_on_four_vertices_matches_brute_force(h):
    best = None
    for colors in product((0, 1, 2), repeat=6):
        black = sum(1 << p for p, c in enumerate(colors) if c == 1)
        gray = sum(1 << p for p, c in enumerate(colors) if c == 2)
        t = Trigraph.from_masks(4, black, gray)
        if trigraph_saturated(t, h) and (best is None or t.num_gray < best):
            best = t.num_gray
    rep = search_indsat(4, h, 4)
    assert rep.result == (EXCEEDS_BUDGET if best is None or best > 4 else best)
