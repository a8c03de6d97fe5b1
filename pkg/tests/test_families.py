import pytest
from hypothesis import given, settings, strategies as st

from graphmatroids.errors import InvalidArgumentError, ResourceLimitError, SpecSyntaxError
from graphmatroids.families import (Bicircular, Count, DeCone, EvenCycle, Graphic, Rigidity,
                                    Truncation, Uniform, Union, bicircular_independent,
                                    count_independent, count_threshold, decone_independent,
                                    documented_profile, even_cycle_independent,
                                    forbidden_sparse_independent, format_family,
                                    graphic_independent, make_oracle, parse_family,
                                    rigidity_independent, stars, truncation_independent,
                                    uniform_independent, union_stable_check,
                                    union_stable_independent)
from graphmatroids.graph import (Graph, complete_graph, cycle_graph, disjoint_union,
                                 enumerate_graphs, enumerate_graphs_by_edges, path_graph,
                                 star_graph)
from graphmatroids.sparsity import (PebbleState, is_sparse_exhaustive, is_sparse_pebble,
                                    pebble_rank)

from oracles import bf_even_cycle, bf_forest, bf_pseudoforest, bf_rank, bf_sparse

K4_MINUS = Graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


# -- predicate examples ----------------------------------------------------

def test_graphic_examples():
    assert graphic_independent(path_graph(4))
    assert not graphic_independent(cycle_graph(3))
    assert not graphic_independent(complete_graph(4))


def test_bicircular_examples():
    assert bicircular_independent(cycle_graph(5))
    assert not bicircular_independent(complete_graph(4))
    assert bicircular_independent(disjoint_union(cycle_graph(3), cycle_graph(3)))


def test_even_cycle_examples():
    assert even_cycle_independent(cycle_graph(3))
    assert not even_cycle_independent(cycle_graph(4))
    assert even_cycle_independent(disjoint_union(cycle_graph(3), cycle_graph(5)))


def test_count_examples():
    assert not count_independent(complete_graph(4), 2, 3)
    assert count_independent(K4_MINUS, 2, 3)
    for g in enumerate_graphs(6):
        assert count_independent(g, 1, 1) == graphic_independent(g)


@pytest.mark.parametrize("k,l", [(0, 0), (1, 2), (2, 4)])
def test_count_parameter_errors(k, l):
    with pytest.raises(InvalidArgumentError):
        Count(k, l)


def test_rigidity_examples():
    assert rigidity_independent(complete_graph(3), 2)
    assert not rigidity_independent(complete_graph(4), 2)


def test_uniform_and_truncation_examples():
    assert uniform_independent(path_graph(4), 3)
    assert not uniform_independent(complete_graph(4), 3)
    assert not uniform_independent(Graph([(0, 1)]), 0)
    g = make_oracle(Graphic())
    assert truncation_independent(path_graph(3), g, 2)
    assert not truncation_independent(path_graph(4), g, 2)
    assert not truncation_independent(cycle_graph(3), g, 5)


def test_union_stable_examples():
    assert union_stable_check([star_graph(3)], 3)
    assert not union_stable_check([star_graph(2)], 2)
    assert union_stable_check([], 3)
    with pytest.raises(InvalidArgumentError):
        union_stable_check([star_graph(2)], 3)
    X = [star_graph(3)]
    assert not union_stable_independent(star_graph(3), X, 3)
    assert union_stable_independent(cycle_graph(3), X, 3)
    assert not union_stable_independent(path_graph(5), X, 3)
    with pytest.raises(InvalidArgumentError):
        union_stable_independent(path_graph(2), [star_graph(2)], 2)


def test_union_stable_empty_is_uniform():
    for g in enumerate_graphs(5):
        assert union_stable_independent(g, [], 3) == uniform_independent(g, 3)


def test_forbidden_sparse_examples():
    k5 = complete_graph(5)
    for g in enumerate_graphs(5):
        assert forbidden_sparse_independent(g, 2, []) == count_independent(g, 2, 0)
    assert not forbidden_sparse_independent(k5, 2, [k5])
    assert forbidden_sparse_independent(complete_graph(4), 2, [k5])


def test_forbidden_sparse_membership_rules():
    from graphmatroids.families import ForbiddenSparse
    ForbiddenSparse(2, (complete_graph(5),))
    with pytest.raises(InvalidArgumentError):
        ForbiddenSparse(2, (cycle_graph(5),))


def test_decone_examples():
    assert not decone_independent(complete_graph(3), make_oracle(Rigidity(2)))
    assert not decone_independent(Graph([(0, 1)]), make_oracle(Graphic()))
    assert decone_independent(Graph([(0, 1)]), make_oracle(Bicircular()))
    with pytest.raises(InvalidArgumentError):
        DeCone(Uniform(3))


# -- brute-force agreement -------------------------------------------------

def test_predicates_match_brute_force():
    for g in enumerate_graphs(6):
        es = g.edge_list
        assert graphic_independent(g) == bf_forest(es)
        assert bicircular_independent(g) == bf_pseudoforest(es)
        assert even_cycle_independent(g) == bf_even_cycle(es), g


@pytest.mark.parametrize("k,l", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3), (3, 3),
                                 (3, 5), (1, -1), (2, -2)])
def test_count_matches_subset_check(k, l):
    for g in enumerate_graphs(6):
        assert count_independent(g, k, l) == bf_sparse(g.edge_list, k, l), g


@pytest.mark.parametrize("k,l", [(1, 1), (2, 3), (2, 1), (3, 4)])
def test_pebble_game_matches_exhaustive(k, l):
    for m in range(1, 9):
        for g in enumerate_graphs_by_edges(m, max_vertices=6):
            assert is_sparse_pebble(g.edges, k, l) == is_sparse_exhaustive(g.edges, k, l)
            indep = lambda es: bf_sparse(es, k, l)
            if m <= 7:
                assert pebble_rank(g.edges, k, l) == bf_rank(indep, g.edge_list)


def test_pebble_state_invariant():
    st_ = PebbleState(2, 3)
    for u, v in complete_graph(6).edge_list:
        st_.try_insert(u, v)
        assert all(0 <= p <= 2 for p in st_.pebbles.values())
        assert st_.total() == 2 * len(st_.pebbles)


def test_exhaustive_sparsity_cap():
    with pytest.raises(ResourceLimitError):
        is_sparse_exhaustive(complete_graph(13).edges, 1, -1)


def test_rigidity_one_is_graphic():
    for g in enumerate_graphs(6):
        assert rigidity_independent(g, 1) == graphic_independent(g)


def test_rigidity_two_is_count_two_three():
    for g in enumerate_graphs(6):
        assert rigidity_independent(g, 2) == count_independent(g, 2, 3), g


@pytest.mark.parametrize("d", [1, 2, 3])
def test_rigidity_complete_ranks(d):
    o = make_oracle(Rigidity(d))
    for n in range(d + 1, 8):
        assert o.rank_edges(complete_graph(n).edges) == d * n - d * (d + 1) // 2
    from graphmatroids.matroid import is_circuit
    assert is_circuit(o, complete_graph(d + 2))


def test_rigidity_deterministic_across_labelings():
    o1, o2 = make_oracle(Rigidity(3)), make_oracle(Rigidity(3))
    for g in enumerate_graphs(5):
        h = g.relabel({v: 3 * v + 11 for v in g.vertices})
        assert o1.is_independent(g) == o2.is_independent(h)


# -- profiles --------------------------------------------------------------

def test_count_threshold_values():
    # frozen from exhaustive circuit search with n_max = 8
    assert [count_threshold(2, l) for l in (3, 2, 1, 0)] == [3, 4, 5, 5]
    assert [count_threshold(3, l) for l in (5, 4, 3, 2, 1, 0)] == [5, 6, 6, 7, 7, 7]
    assert count_threshold(1, 1) == 2 and count_threshold(1, 0) == 3


def test_documented_profiles():
    assert documented_profile(Graphic()) == (1, 2)
    assert documented_profile(Bicircular()) == (1, 3)
    assert documented_profile(EvenCycle()) == (1, 3)
    assert documented_profile(Count(2, 3)) == (2, 3)
    assert documented_profile(Rigidity(3)) == (3, 4)
    assert documented_profile(Union((Graphic(), Graphic()))) == (2, 4)
    assert documented_profile(Uniform(3)) is None


# -- text syntax -----------------------------------------------------------

@pytest.mark.parametrize("text,spec", [
    ("graphic", Graphic()),
    ("bicircular", Bicircular()),
    ("even-cycle", EvenCycle()),
    ("count:k=2,l=3", Count(2, 3)),
    ("rigidity:d=2", Rigidity(2)),
    ("rigidity:d=2,trials=5,seed=4", Rigidity(2, 5, 4)),
    ("uniform:k=3", Uniform(3)),
    ("trunc(graphic,k=5)", Truncation(Graphic(), 5)),
    ("trunc(count:k=2,l=3,k=5)", Truncation(Count(2, 3), 5)),
    ("union(graphic;bicircular)", Union((Graphic(), Bicircular()))),
    ("decone(rigidity:d=2)", DeCone(Rigidity(2))),
    (" union( graphic ; graphic ) ", Union((Graphic(), Graphic()))),
])
def test_parse_family(text, spec):
    assert parse_family(text) == spec
    assert parse_family(format_family(spec)) == spec


def test_parse_stars():
    spec = parse_family("stars:m=3")
    assert spec == stars(3) and format_family(spec) == "stars:m=3"


@pytest.mark.parametrize("text,pos", [
    ("", 0),
    ("graphix", 0),
    ("count:k=2", 0),
    ("count:k=2,l=9", 0),
    ("count:k=2,q=1", 10),
    ("union(graphic;", 14),
    ("graphic extra", 8),
    ("trunc(graphic,m=2)", 14),
])
def test_parse_errors_cite_position(text, pos):
    with pytest.raises(SpecSyntaxError) as info:
        parse_family(text)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


_atoms = st.sampled_from(["graphic", "bicircular", "even-cycle", "count:k=2,l=3",
                          "rigidity:d=2", "uniform:k=2"])
_specs = st.recursive(_atoms, lambda inner: st.one_of(
    st.builds(lambda s, k: f"trunc({s},k={k})", inner, st.integers(0, 6)),
    st.builds(lambda a, b: f"union({a};{b})", inner, inner)), max_leaves=4)


@settings(max_examples=80, deadline=None)
@given(_specs)
def test_parse_format_roundtrip(text):
    spec = parse_family(text)
    assert parse_family(format_family(spec)) == spec
