import itertools

import pytest
from hypothesis import given, settings, strategies as st

from graphmatroids.errors import (InvalidArgumentError, PreconditionError, ResourceLimitError)
from graphmatroids.families import documented_profile, make_oracle, parse_family
from graphmatroids.graph import (Graph, complete_graph, cycle_graph, enumerate_graphs,
                                 enumerate_graphs_by_edges, is_isomorphic, matching_graph,
                                 star_graph)
from graphmatroids.matroid import complete_rank, is_circuit
from graphmatroids.structure import (AtLeast, bounded_rank, classify_abstract_rigidity,
                                     compute_profile, find_removable_vertex,
                                     is_k_redundantly_rigid, probe_boundedness,
                                     probe_one_extendability, r_zero,
                                     removable_vertex_degree_bound, small_circuit_min_degree_one)

BOWTIE = Graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
BOUNDED = ["uniform:k=3", "trunc(graphic,k=4)", "stars:m=3", "stars:m=4"]


def oracle(text):
    return make_oracle(parse_family(text))


# -- profiles --------------------------------------------------------------

@pytest.mark.parametrize("text,pair,witness", [
    ("graphic", (1, 2), cycle_graph(3)),
    ("even-cycle", (1, 3), cycle_graph(4)),
    ("bicircular", (1, 3), None),
    ("count:k=2,l=3", (2, 3), complete_graph(4)),
    ("rigidity:d=2", (2, 3), complete_graph(4)),
])
def test_compute_profile_examples(text, pair, witness):
    p = compute_profile(oracle(text), 6)
    assert p.pair() == pair and p.exact and not p.bounded and p.nontrivial
    assert is_circuit(oracle(text), p.witness_circuit)
    if witness is not None:
        assert is_isomorphic(p.witness_circuit, witness)


def test_compute_profile_bounded():
    p = compute_profile(oracle("stars:m=3"), 5)
    assert p.bounded and p.dimensionality == 0 and p.bounded_rank == 3 and p.exact


def test_compute_profile_no_circuit_in_horizon():
    p = compute_profile(oracle("count:k=3,l=0"), 4)
    assert isinstance(p.threshold, AtLeast) and not p.exact


def test_compute_profile_caps():
    with pytest.raises(ResourceLimitError):
        compute_profile(oracle("graphic"), 9)
    with pytest.raises(InvalidArgumentError):
        compute_profile(oracle("graphic"), 1)


def test_profile_json_keys():
    js = compute_profile(oracle("graphic"), 4).to_json()
    assert set(js) == {"nontrivial", "bounded", "dimensionality", "dimensionality_exact",
                       "threshold", "threshold_exact", "rank_sequence", "bounded_rank",
                       "witness_edge_list"}


@pytest.mark.parametrize("text", ["graphic", "bicircular", "even-cycle", "count:k=1,l=0",
                                  "count:k=2,l=2", "rigidity:d=1", "rigidity:d=3",
                                  "uniform:k=2", "stars:m=3"])
def test_profile_invariants(text):
    p = compute_profile(oracle(text), 6)
    seq = p.rank_sequence
    assert all(a <= b for a, b in zip(seq, seq[1:]))
    assert all(b - a <= n for n, (a, b) in enumerate(zip(seq, seq[1:]), start=1))
    assert p.bounded == (p.dimensionality == 0)
    if p.exact:
        assert p.dimensionality < p.threshold


@pytest.mark.parametrize("text", ["graphic", "bicircular", "even-cycle", "count:k=2,l=3",
                                  "count:k=2,l=2", "count:k=2,l=1", "count:k=2,l=0",
                                  "count:k=3,l=5", "rigidity:d=1", "rigidity:d=2",
                                  "rigidity:d=3"])
def test_rank_linearity(text):
    o = oracle(text)
    d, t = documented_profile(o.spec)
    for n in range(t, 9):
        assert complete_rank(o, n) == d * (n - t) + complete_rank(o, t)


# -- boundedness -----------------------------------------------------------

def test_probe_boundedness_examples():
    v = probe_boundedness(oracle("uniform:k=3"))
    assert v.bounded and v.witness == matching_graph(4)
    assert not probe_boundedness(oracle("graphic"), 8).bounded
    v = probe_boundedness(oracle("stars:m=3"))
    assert v.bounded and is_isomorphic(v.witness, star_graph(3))


@pytest.mark.parametrize("text,r", [("uniform:k=2", 2), ("uniform:k=5", 5), ("stars:m=3", 3),
                                    ("trunc(graphic,k=5)", 5)])
def test_bounded_rank_examples(text, r):
    assert bounded_rank(oracle(text)) == r


def test_bounded_rank_unbounded_family():
    with pytest.raises(PreconditionError):
        bounded_rank(oracle("graphic"))


def test_small_circuit_examples():
    m, w = small_circuit_min_degree_one(oracle("stars:m=3"))
    assert m == 3 and is_isomorphic(w, star_graph(3))
    assert small_circuit_min_degree_one(oracle("uniform:k=3")) is None
    assert small_circuit_min_degree_one(oracle("trunc(bicircular,k=10)")) is None


@pytest.mark.parametrize("text", BOUNDED)
def test_small_circuit_uniqueness(text):
    o = oracle(text)
    r = bounded_rank(o)
    found = small_circuit_min_degree_one(o, r)
    limit = found[0] if found else r
    # every min-degree-one circuit with at most `limit` edges is that star
    for m in range(1, limit + 1):
        for g in enumerate_graphs_by_edges(m, filter=lambda h: h.min_degree() == 1):
            if is_circuit(o, g):
                assert found is not None and m == found[0] and is_isomorphic(g, found[1])


def _has_matching(g, size):
    for combo in itertools.combinations(g.edge_list, size):
        ends = [x for e in combo for x in e]
        if len(set(ends)) == len(ends):
            return True
    return False


@pytest.mark.parametrize("text", BOUNDED)
def test_bounded_large_matching_gives_full_rank(text):
    o = oracle(text)
    r = bounded_rank(o)
    for g in enumerate_graphs(7):
        if g.m >= r and _has_matching(g, r):
            assert o.rank_edges(g.edges) == r, g


# -- redundant rigidity and classification ---------------------------------

def test_redundant_rigidity_examples():
    g = oracle("graphic")
    assert is_k_redundantly_rigid(g, complete_graph(4), 1)
    assert is_k_redundantly_rigid(g, cycle_graph(4), 1)
    assert not is_k_redundantly_rigid(g, BOWTIE, 1)
    with pytest.raises(InvalidArgumentError):
        is_k_redundantly_rigid(g, complete_graph(3), 2)


def test_redundant_rigidity_isolated_vertex_convention():
    g = oracle("graphic")
    claw = star_graph(3)
    # deleting the centre strands the leaves
    assert is_k_redundantly_rigid(g, claw, 1)
    assert not is_k_redundantly_rigid(g, claw, 1, drop_isolated=False)


@pytest.mark.parametrize("text,verdict", [("rigidity:d=2", True), ("count:k=2,l=3", True),
                                          ("bicircular", False), ("graphic", True)])
def test_classify_abstract_rigidity(text, verdict):
    o = oracle(text)
    assert classify_abstract_rigidity(compute_profile(o, 6), o) is verdict


def test_classify_needs_exact_profile():
    o = oracle("count:k=3,l=0")
    with pytest.raises(PreconditionError):
        classify_abstract_rigidity(compute_profile(o, 4), o)


# -- edge splits and removable vertices ------------------------------------

def test_one_extendability_examples():
    v = probe_one_extendability(oracle("even-cycle"), 1, 3)
    assert not v.ok
    G, uv, extra = v.counterexample
    assert is_isomorphic(G, cycle_graph(3)) and extra == frozenset()
    assert probe_one_extendability(oracle("graphic"), 1, 6).ok
    assert probe_one_extendability(oracle("count:k=2,l=3"), 2, 6).ok


def test_one_extendability_sampling_is_seeded():
    a = probe_one_extendability(oracle("bicircular"), 1, 4, samples=5, seed=3)
    b = probe_one_extendability(oracle("bicircular"), 1, 4, samples=5, seed=3)
    assert a.ok and a.checked == b.checked


def test_find_removable_vertex_examples():
    assert find_removable_vertex(oracle("graphic"), complete_graph(4), 1) is not None
    assert find_removable_vertex(oracle("rigidity:d=2"), complete_graph(5), 2) is not None
    v = find_removable_vertex(oracle("graphic"), star_graph(4), 1)
    assert v is not None and star_graph(4).degree(v) == 1


def test_r_zero_and_bound():
    assert r_zero(oracle("graphic"), 1, 2) == -1
    assert removable_vertex_degree_bound(oracle("graphic"), 1, 2) == 12
    assert removable_vertex_degree_bound(oracle("rigidity:d=2"), 2, 3) == 18
    assert removable_vertex_degree_bound(oracle("bicircular"), 1, 3) == 18


def _dense(n, removed_mask):
    """K_n minus the disjoint pairs (2i, 2i+1) selected by ``removed_mask``."""
    drop = {(2 * i, 2 * i + 1) for i in range(n // 2) if removed_mask >> i & 1}
    return Graph(e for e in complete_graph(n).edges if e not in drop)


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([("graphic", 1, 2), ("bicircular", 1, 3), ("count:k=2,l=3", 2, 3)]),
       st.integers(0, 255))
def test_removable_vertex_at_high_min_degree(fam, mask):
    text, d, t = fam
    o = oracle(text)
    bound = removable_vertex_degree_bound(o, d, t)
    g = _dense(bound + 2, mask)
    assert g.min_degree() >= bound
    v = find_removable_vertex(o, g, d)
    assert v is not None
    assert o.rank_edges(g.edges) <= o.rank_edges(g.delete_vertices([v]).edges) + d


def test_removable_vertex_k13_graphic_and_k19_rigidity():
    assert find_removable_vertex(oracle("graphic"), complete_graph(13), 1) is not None
    assert find_removable_vertex(oracle("rigidity:d=2"), complete_graph(19), 2) is not None
