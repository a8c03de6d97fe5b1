import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from graphmatroids.errors import InvalidArgumentError, ResourceLimitError
from graphmatroids.graph import (Graph, canonical_form, canonical_graph, complete_bipartite,
                                 complete_graph, cone, cycle_graph, disjoint_union, edge_split,
                                 enumerate_graphs, enumerate_graphs_by_edges, find_isomorphism,
                                 find_subgraph, format_edge_list, induced_by_edges, is_isomorphic,
                                 k_dominating_set, matching_graph, parse_edge_list, path_graph,
                                 star_graph, vertex_connectivity)

from oracles import bf_all_graphs, bf_canonical, bf_vertex_connectivity

BOWTIE = Graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


# -- constructors and operations -------------------------------------------

@pytest.mark.parametrize("n,m", [(1, 0), (4, 6), (7, 21)])
def test_complete_graph_sizes(n, m):
    g = complete_graph(n)
    assert (g.n, g.m) == (n, m)


def test_complete_graph_rejects_zero():
    with pytest.raises(InvalidArgumentError):
        complete_graph(0)


def test_graph_rejects_loops():
    with pytest.raises(InvalidArgumentError):
        Graph([(1, 1)])


def test_graph_collapses_parallel_edges():
    assert Graph([(0, 1), (1, 0)]).m == 1


def test_induced_by_edges():
    k4 = complete_graph(4)
    tri = induced_by_edges(k4, [(0, 1), (1, 2), (0, 2)])
    assert tri == Graph([(0, 1), (1, 2), (0, 2)])
    assert induced_by_edges(k4, []).m == 0 and induced_by_edges(k4, []).n == 0
    pm = induced_by_edges(k4, [(0, 1), (2, 3)])
    assert (pm.n, pm.m) == (4, 2)
    with pytest.raises(InvalidArgumentError):
        induced_by_edges(k4, [(0, 9)])


def test_cone_examples():
    assert is_isomorphic(cone(complete_graph(3)), complete_graph(4))
    w4 = cone(cycle_graph(4))
    assert w4.m == 8 and sorted(w4.degrees().values()) == [3, 3, 3, 3, 4]
    assert is_isomorphic(cone(Graph([(0, 1)])), complete_graph(3))


def test_edge_split_examples():
    assert is_isomorphic(edge_split(cycle_graph(3), (0, 1), [], 1), cycle_graph(4))
    g = edge_split(complete_graph(4), (0, 1), [2], 2)
    # 6 - 1 + 3 edges
    assert (g.n, g.m, g.degree(4)) == (5, 8, 3)
    assert is_isomorphic(edge_split(path_graph(3), (0, 1), [], 1), path_graph(4))


@pytest.mark.parametrize("uv,extra,d", [((0, 3), [], 1), ((0, 1), [0], 2), ((0, 1), [], 2)])
def test_edge_split_errors(uv, extra, d):
    with pytest.raises(InvalidArgumentError):
        edge_split(path_graph(3), uv, extra, d)


def test_edge_split_degrees_property():
    rng = random.Random(3)
    for g in enumerate_graphs(5):
        for d in (1, 2):
            uv = rng.choice(g.edge_list)
            others = [x for x in g.vertices if x not in uv]
            if len(others) < d - 1:
                continue
            extra = rng.sample(others, d - 1)
            h = edge_split(g, uv, extra, d)
            w = max(h.vertices)
            assert h.degree(w) == d + 1
            touched = set(uv) | set(extra)
            for v in g.vertices:
                delta = h.degree(v) - g.degree(v)
                assert delta == (1 if v in extra else 0) and (v in touched or delta == 0)


@pytest.mark.parametrize("g,kappa", [(complete_graph(5), 4), (cycle_graph(6), 2), (BOWTIE, 1)])
def test_vertex_connectivity_examples(g, kappa):
    assert vertex_connectivity(g) == kappa


def test_vertex_connectivity_needs_two_vertices():
    with pytest.raises(InvalidArgumentError):
        vertex_connectivity(Graph([], [0]))


def test_vertex_connectivity_matches_brute_force():
    for g in enumerate_graphs(6):
        assert vertex_connectivity(g) == bf_vertex_connectivity(g), g


def test_cone_raises_connectivity():
    for g in enumerate_graphs(6):
        kappa = vertex_connectivity(g)
        if g.is_connected() and kappa < g.n - 1:
            assert vertex_connectivity(cone(g)) == kappa + 1


# -- isomorphism and canonical forms ---------------------------------------

def test_find_isomorphism_examples():
    c4 = cycle_graph(4)
    relabeled = c4.relabel({0: 7, 1: 3, 2: 9, 3: 5})
    phi = find_isomorphism(c4, relabeled)
    assert phi is not None and c4.relabel(phi) == relabeled
    assert find_isomorphism(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))) is None
    assert find_isomorphism(star_graph(3), path_graph(4)) is None


def test_find_isomorphism_cap():
    with pytest.raises(ResourceLimitError):
        find_isomorphism(cycle_graph(12), cycle_graph(12), cap=10)


def test_canonical_form_matches_brute_force_on_six_vertices():
    # the canonical form must induce exactly the brute-force partition into
    # isomorphism classes
    graphs = bf_all_graphs(5)
    graphs += [g for g in enumerate_graphs(6) if g.n == 6]
    by_ours, by_bf = {}, {}
    for g in graphs:
        by_ours.setdefault(canonical_form(g), set()).add(bf_canonical(g))
        by_bf.setdefault(bf_canonical(g), set()).add(canonical_form(g))
    assert all(len(v) == 1 for v in by_ours.values())
    assert all(len(v) == 1 for v in by_bf.values())


def test_canonical_graph_is_isomorphic():
    for g in enumerate_graphs(5):
        assert bf_canonical(canonical_graph(g)) == bf_canonical(g)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda e: e[0] != e[1]),
               min_size=1, max_size=12),
       st.permutations(list(range(20))))
def test_canonical_form_invariant_under_relabeling(edges, perm):
    g = Graph(edges)
    h = g.relabel({v: perm[v] for v in g.vertices})
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(g, h)


# -- enumeration -----------------------------------------------------------

def test_enumerate_small_examples():
    got = list(enumerate_graphs(3))
    assert len(got) == 3
    assert {canonical_form(g) for g in got} == {canonical_form(h) for h in
                                                (Graph([(0, 1)]), path_graph(3), cycle_graph(3))}
    assert list(enumerate_graphs(1)) == []
    forests = list(enumerate_graphs(4, filter=lambda g: g.is_forest()))
    expected = [Graph([(0, 1)]), matching_graph(2), path_graph(3), path_graph(4), star_graph(3)]
    assert sorted(canonical_form(g) for g in forests) == sorted(canonical_form(g) for g in expected)


# graphs without isolated vertices on exactly n vertices: 1, 2, 7, 23, 122, 888
@pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 10), (5, 33), (6, 155), (7, 1043)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_graphs(n)) == count


def test_enumeration_matches_brute_force_classes():
    ours = {bf_canonical(g) for g in enumerate_graphs(5)}
    assert ours == {bf_canonical(g) for g in bf_all_graphs(5)}
    assert len(ours) == 33


def test_enumeration_pairwise_non_isomorphic():
    graphs = list(enumerate_graphs(5))
    for a, b in itertools.combinations(graphs, 2):
        assert find_isomorphism(a, b) is None
    assert all(not g.has_isolated_vertices() for g in graphs)


# graphs with m edges and no isolated vertices: 1, 2, 5, 11, 26, 68, 177, 497
@pytest.mark.parametrize("m,count", [(1, 1), (2, 2), (3, 5), (4, 11), (5, 26), (6, 68),
                                     (7, 177), (8, 497)])
def test_enumeration_by_edges_counts(m, count):
    assert sum(1 for _ in enumerate_graphs_by_edges(m)) == count


def test_enumeration_caps():
    with pytest.raises(ResourceLimitError):
        next(iter(enumerate_graphs(9)))
    with pytest.raises(ResourceLimitError):
        next(iter(enumerate_graphs_by_edges(11)))


# -- misc -----------------------------------------------------------------

def test_k_dominating_set_examples():
    assert len(k_dominating_set(complete_graph(5), 1)) == 1
    assert k_dominating_set(cycle_graph(4), 2) in ({0, 2}, {1, 3})
    assert k_dominating_set(star_graph(4), 1) == {0}
    for g in enumerate_graphs(5):
        for k in (1, 2):
            U = k_dominating_set(g, k)
            assert all(len(g.neighbors(v) & U) >= k for v in g.vertices if v not in U)


def test_find_subgraph():
    assert find_subgraph(cycle_graph(3), complete_graph(4)) is not None
    assert find_subgraph(cycle_graph(3), complete_bipartite(2, 3)) is None


def test_edge_list_roundtrip():
    text = "# a comment\n0 1\n\n1 2  # trailing\n2 0\n"
    g = parse_edge_list(text)
    assert g == cycle_graph(3)
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("bad", ["0 1 2\n", "0 x\n", "3 3\n"])
def test_edge_list_errors(bad):
    with pytest.raises(InvalidArgumentError):
        parse_edge_list(bad)
