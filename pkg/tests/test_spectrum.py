from itertools import combinations
from math import comb

import pytest

from ordersize.core import Hypergraph, OrderedGraph, complete_hypergraph, empty_hypergraph
from ordersize.constructions import cyclic_triangle_3graph, random_ordered_graph
from ordersize.errors import BudgetExhausted, FactorizationError, SearchFailed
from ordersize.rng import SeededRNG
from ordersize.search import HomogeneousWitness
from ordersize.spectrum import (
    WeightFrame,
    WeightedWitness,
    find_mf_subset,
    find_weighted_mf_subset,
    find_induced_ordered_copy,
    pattern_weight_exists,
    pattern_weight_exists_any_split,
    realize_r_plus_1,
    size_spectrum,
    verify_lift,
    weighted_total,
)


def graph_from_chi(chig: OrderedGraph, r: int) -> Hypergraph:
    edges = [t for t in combinations(range(chig.n), r) if chig.has_edge(t[0], t[1])]
    return Hypergraph(r, chig.n, edges)


# --- spectra -------------------------------------------------------------------


def test_spectrum_trivial():
    assert size_spectrum(complete_hypergraph(3, 6), 4).achieved == [4]
    assert size_spectrum(empty_hypergraph(3, 7), 5).achieved == [0]
    one = Hypergraph(3, 6, [(0, 1, 2)])
    rep = size_spectrum(one, 3)
    assert rep.achieved == [0, 1] and rep.s == 2


def test_spectrum_witnesses_and_mirror():
    h = cyclic_triangle_3graph(9, 2)
    rep = size_spectrum(h, 5)
    for f, w in rep.witnesses.items():
        assert h.edge_count(w) == f
    crep = size_spectrum(h.complement(), 5)
    assert sorted(comb(5, 3) - f for f in rep.achieved) == crep.achieved


def test_spectrum_cap_and_sampled():
    h = cyclic_triangle_3graph(12, 0)
    with pytest.raises(ValueError):
        size_spectrum(h, 6, cap=100)
    rep = size_spectrum(h, 6, mode="sampled", samples=500, seed=4)
    full = size_spectrum(h, 6)
    assert set(rep.achieved) <= set(full.achieved)
    again = size_spectrum(h, 6, mode="sampled", samples=500, seed=4)
    assert rep.achieved == again.achieved and rep.witnesses == again.witnesses


def test_find_mf_subset():
    k6 = complete_hypergraph(3, 6)
    assert k6.edge_count(find_mf_subset(k6, 4, 4)) == 4
    assert find_mf_subset(k6, 4, 3) is None  # proven absent exhaustively
    with pytest.raises(BudgetExhausted):
        find_mf_subset(k6, 4, 3, budget=5)
    h = cyclic_triangle_3graph(10, 7)
    got = find_mf_subset(h, 6, 0)
    want = next((s for s in combinations(range(10), 6) if h.edge_count(s) == 0), None)
    assert got == want


# --- weight frames ----------------------------------------------------------------


def test_weight_frame_values():
    fr = WeightFrame(3, 7, 1)
    assert fr.size == 6 and list(fr.positions) == [1, 2, 3, 4, 5, 6]
    assert [fr.weight(1, j) for j in range(2, 7)] == [5, 4, 3, 2, 1]
    fr4 = WeightFrame(4, 10, 1)
    assert fr4.weight(2, 5) == comb(5, 2)
    frk = WeightFrame(5, 11, 3)
    assert frk.weight(4, 6) == comb(3, 2) * comb(5, 1)


def test_weight_table_counts_every_subset_once():
    # brute force: each r-subset of [m] is counted at the pair of its k-th
    # and (k+1)-th smallest elements
    for r in (3, 4, 5):
        for m in range(r + 1, 13):
            for k in range(1, r):
                assert WeightFrame(r, m, k).total() == comb(m, r)


def test_weighted_total():
    fr = WeightFrame(3, 5, 1)
    empty = OrderedGraph(4, ())
    assert weighted_total(empty, range(4), fr) == 0
    single = OrderedGraph(4, [(0, 1)])
    assert weighted_total(single, range(4), fr) == 3  # positions (1, 2), w = 5-2
    complete = OrderedGraph(8, combinations(range(8), 2))
    fr4 = WeightFrame(4, 10, 1)
    want = sum(comb(10 - j, 2) for i in range(1, 9) for j in range(i + 1, 9))
    assert weighted_total(complete, range(8), fr4) == want == comb(10, 4)


def test_weighted_total_monotone_under_edges():
    fr = WeightFrame(4, 9, 1)
    rng = SeededRNG(3)
    edges = []
    g = OrderedGraph(7, edges)
    last = weighted_total(g, range(7), fr)
    for pair in combinations(range(7), 2):
        edges.append(pair)
        now = weighted_total(OrderedGraph(7, edges), range(7), fr)
        assert now >= last
        last = now


# --- the lift identity --------------------------------------------------------------


def test_verify_lift_constant_colorings():
    for bit in (0, 1):
        chig = OrderedGraph(8, combinations(range(8), 2) if bit else ())
        h = graph_from_chi(chig, 3)
        assert verify_lift(h, range(8), [0, 2, 4], [6])


def test_verify_lift_random_instances():
    rng = SeededRNG(11)
    for trial in range(200):
        chig = random_ordered_graph(10, 50, rng.subseed(trial))
        h = graph_from_chi(chig, 3)
        size = rng.randint(2, 8)
        u = sorted(rng.sample(9, size))
        after = list(range(u[-1] + 1, 10))
        if not after:
            continue
        tail = [after[rng.randrange(len(after))]]
        assert verify_lift(h, range(10), u, tail)


def test_verify_lift_detects_bad_factorization():
    chig = OrderedGraph(6, [(0, 1)])
    h = graph_from_chi(chig, 3)
    broken = Hypergraph(3, 6, set(h.edges) ^ {(2, 3, 4)})
    with pytest.raises(FactorizationError) as err:
        verify_lift(broken, range(6), [0, 1, 2], [5])
    assert err.value.offending == (2, 3, 4)


def test_single_edge_chi_weight():
    chig = OrderedGraph(6, [(1, 2)])
    h = graph_from_chi(chig, 3)
    u, tail = [0, 1, 2, 3], [5]
    fr = WeightFrame(3, 5, 1)
    assert h.edge_count(tuple(u) + tuple(tail)) == weighted_total(chig, u, fr)
    assert verify_lift(h, range(6), u, tail)


# --- weighted (m,f)-subsets ----------------------------------------------------------


def test_weighted_search_m3():
    g = OrderedGraph(9, [(i, j) for i, j in combinations(range(9), 2) if (i, j) != (2, 5)])
    out = find_weighted_mf_subset(g, 3, 3, 0, 2)
    assert isinstance(out, WeightedWitness) and out.vertices == (2, 5)
    complete = OrderedGraph(9, combinations(range(9), 2))
    out = find_weighted_mf_subset(complete, 3, 3, 0, 3)
    assert isinstance(out, HomogeneousWitness) and out.kind == "clique" and out.size() == 9


def test_weighted_search_m4_f2_case():
    # a backward non-neighborhood holding an edge gives the weight-2 witness
    g = OrderedGraph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
    out = find_weighted_mf_subset(g, 3, 4, 2, 2)
    if isinstance(out, WeightedWitness):
        assert out.verify(g) and out.f == 2
    else:
        assert out.size() >= 2


def test_weighted_search_suite():
    rng = SeededRNG(5)
    for trial in range(40):
        g = random_ordered_graph(64, 50, rng.subseed(trial))
        for m in (3, 4, 5):
            for f in range(comb(m, 3) // 2 + 1):
                for h in (2, 3, 4):
                    out = find_weighted_mf_subset(g, 3, m, f, h)
                    if isinstance(out, WeightedWitness):
                        assert out.verify(g)
                        assert out.f == f and out.m == m
                    else:
                        assert out.size() >= h
                        gg = g if out.kind == "clique" else g.complement()
                        assert gg.is_clique(out.set)


def test_weighted_search_complement_mapping():
    # f above half the range goes through the complement and maps back
    rng = SeededRNG(9)
    for trial in range(20):
        g = random_ordered_graph(64, 50, rng.subseed(trial))
        for f in (7, 8, 9, 10):  # above half of C(5,3) = 10
            out = find_weighted_mf_subset(g, 3, 5, f, 3)
            if isinstance(out, WeightedWitness):
                assert out.verify(g) and out.f == f


def test_weighted_search_failure_reported():
    complete = OrderedGraph(4, combinations(range(4), 2))
    with pytest.raises(SearchFailed):
        find_weighted_mf_subset(complete, 3, 6, 3, 5)


def test_weighted_search_r4_base_case_embedding():
    # a planted copy of the builder's pattern is found and lifted back
    from ordersize.hbuilder import build_H

    f = 345678
    pat = build_H(4, 80, f).graph
    host = OrderedGraph(pat.n + 2, pat.edges)
    out = find_weighted_mf_subset(host, 4, 80, f, 2, budget=2_000_000)
    assert isinstance(out, WeightedWitness) and out.verify(host)
    # one induction level above the base: prepended isolated vertex
    host2 = OrderedGraph(pat.n + 3, [(a + 1, b + 1) for a, b in pat.edges])
    out2 = find_weighted_mf_subset(host2, 4, 81, f, 2, budget=2_000_000)
    assert isinstance(out2, WeightedWitness) and out2.verify(host2)


def test_weighted_search_r4_small_m_direct_scan():
    rng = SeededRNG(44)
    for trial in range(10):
        g = random_ordered_graph(12, 50, rng.subseed(trial))
        for f in (0, 2, 5):
            out = find_weighted_mf_subset(g, 4, 6, f, 2, budget=100_000)
            if isinstance(out, WeightedWitness):
                assert out.verify(g) and out.f == f
            else:
                assert out.size() >= 2


def test_find_induced_ordered_copy():
    pattern = OrderedGraph(3, [(0, 2)])
    g = OrderedGraph(5, [(0, 4), (1, 2)])
    hit = find_induced_ordered_copy(g, pattern)
    assert hit is not None
    a, b, c = hit
    assert g.has_edge(a, c) and not g.has_edge(a, b) and not g.has_edge(b, c)
    assert find_induced_ordered_copy(OrderedGraph(4, ()), OrderedGraph(2, [(0, 1)])) is None


# --- m = r+1 realization ---------------------------------------------------------------


def test_realize_empty_chi():
    h = empty_hypergraph(4, 12)
    res = realize_r_plus_1(h, 0)
    assert res.witness is not None and h.edge_count(res.witness) == 0


def test_realize_r3_random():
    rng = SeededRNG(21)
    for f in range(0, 5):
        h = Hypergraph(3, 24, [e for e in combinations(range(24), 3) if rng.coin()])
        res = realize_r_plus_1(h, f)
        if res.witness is not None:
            assert h.edge_count(res.witness) == f


def test_realize_synthetic_pattern_r4():
    # coloring already factoring through pairs keeps the whole vertex set
    rng = SeededRNG(33)
    for f in (2, 3):
        chig = random_ordered_graph(16, 50, rng.subseed(f))
        h = graph_from_chi_at_k(chig, 4, f)
        res = realize_r_plus_1(h, f)
        if res.witness is not None:
            assert h.edge_count(res.witness) == f
            assert len(res.witness) == 5


def graph_from_chi_at_k(chig: OrderedGraph, r: int, k: int) -> Hypergraph:
    edges = [
        t for t in combinations(range(chig.n), r) if chig.has_edge(t[k - 1], t[k])
    ]
    return Hypergraph(r, chig.n, edges)


def test_realize_complementation():
    h = complete_hypergraph(4, 12)
    res = realize_r_plus_1(h, 5)  # = r+1; complements to f' = 0
    assert res.complemented
    assert res.witness is not None and h.edge_count(res.witness) == 5


def test_realize_too_short():
    with pytest.raises(SearchFailed):
        realize_r_plus_1(empty_hypergraph(4, 5), 0)


# --- pattern-weight existence -----------------------------------------------------------


def test_pattern_weight_exists_basics():
    assert pattern_weight_exists(3, 5, 0, 1)
    assert pattern_weight_exists(3, 5, comb(5, 3), 1)  # the complete pattern
    assert not pattern_weight_exists(10, 12, 33, 1)


def test_pattern_weight_exists_any_split():
    splits = pattern_weight_exists_any_split(10, 12, 33)
    assert set(splits) == {1, 2, 3, 4, 5}
    assert not any(splits.values())
    assert all(pattern_weight_exists_any_split(10, 12, 0).values())
