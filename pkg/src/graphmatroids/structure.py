"""Structural invariants of a family computed from oracle access on small
graphs: dimensionality, threshold, boundedness, bounded rank, small circuits,
vertex-redundant rigidity and edge-split probing.

Everything here is a finite-horizon computation.  Profiles carry exactness
flags and are only marked exact when a certificate circuit was found and a
documented profile agrees with it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import FamilyAxiomError, InvalidArgumentError, PreconditionError, ResourceLimitError
from .graph import (Graph, complete_graph, complete_on, edge_split, enumerate_graphs,
                    enumerate_graphs_by_edges, is_isomorphic, matching_graph, star_graph)
from .matroid import Oracle, complete_rank, is_circuit, is_rigid

PROFILE_VERTEX_CAP = 8
BOUNDEDNESS_HORIZON = 16


@dataclass(frozen=True)
class AtLeast:
    """Lower-bound marker for a quantity not determined within the horizon."""

    value: int

    def __str__(self):
        return f">={self.value}"

    def to_json(self):
        return {"at_least": self.value}


@dataclass
class FamilyProfile:
    nontrivial: bool
    bounded: bool
    dimensionality: object
    dimensionality_exact: bool
    threshold: object
    threshold_exact: bool
    rank_sequence: list
    bounded_rank: Optional[int] = None
    witness_circuit: Optional[Graph] = None
    n_max: int = 0

    @property
    def exact(self) -> bool:
        return self.dimensionality_exact and self.threshold_exact

    def pair(self) -> tuple:
        return (self.dimensionality, self.threshold)

    def to_json(self) -> dict:
        def enc(x):
            return x.to_json() if isinstance(x, AtLeast) else x
        return {
            "nontrivial": self.nontrivial,
            "bounded": self.bounded,
            "dimensionality": enc(self.dimensionality),
            "dimensionality_exact": self.dimensionality_exact,
            "threshold": enc(self.threshold),
            "threshold_exact": self.threshold_exact,
            "rank_sequence": list(self.rank_sequence),
            "bounded_rank": self.bounded_rank,
            "witness_edge_list": (None if self.witness_circuit is None
                                  else [list(e) for e in self.witness_circuit.edge_list]),
        }


@dataclass(frozen=True)
class BoundednessVerdict:
    bounded: bool
    horizon: int
    # a dependent matching or star when bounded
    witness: Optional[Graph] = None

    def __str__(self):
        if self.bounded:
            return f"bounded (dependent forest {self.witness!r})"
        return f"unbounded up to horizon {self.horizon}"


def _documented(oracle: Oracle):
    from .families import documented_profile
    try:
        return documented_profile(oracle.spec)
    except Exception:
        return None


def _search_circuits(oracle: Oracle, n_max: int) -> Optional[Graph]:
    """The circuit minimising (min degree, vertex count) on at most ``n_max``
    vertices; ties go to the first in enumeration order."""
    best = None
    best_key = None
    for g in enumerate_graphs(n_max):
        key = (g.min_degree(), g.n)
        if best_key is not None and key >= best_key:
            continue
        if oracle.is_independent(g):
            continue
        if is_circuit(oracle, g):
            best, best_key = g, key
    return best


def probe_boundedness(oracle: Oracle, m_max: int = BOUNDEDNESS_HORIZON) -> BoundednessVerdict:
    """Any dependent forest proves boundedness; matchings and stars are
    tried in order of size."""
    for m in range(1, m_max + 1):
        for g in (matching_graph(m), star_graph(m)):
            if not oracle.is_independent(g):
                return BoundednessVerdict(True, m_max, g)
    return BoundednessVerdict(False, m_max)


def bounded_rank(oracle: Oracle, horizon: int = BOUNDEDNESS_HORIZON) -> int:
    """r(M) of a bounded family: one less than the size of the smallest
    dependent matching."""
    for m in range(1, horizon + 1):
        if not oracle.is_independent(matching_graph(m)):
            return m - 1
    raise PreconditionError(f"no dependent matching with at most {horizon} edges; "
                            "family looks unbounded")


def compute_profile(oracle: Oracle, n_max: int) -> FamilyProfile:
    if n_max > PROFILE_VERTEX_CAP:
        raise ResourceLimitError(f"profile computation capped at n_max={PROFILE_VERTEX_CAP}")
    if n_max < 2:
        raise InvalidArgumentError("n_max must be at least 2")
    ranks = [complete_rank(oracle, n) for n in range(1, n_max + 1)]
    witness = _search_circuits(oracle, n_max)
    probe = probe_boundedness(oracle, max(n_max, BOUNDEDNESS_HORIZON))
    if witness is None:
        return FamilyProfile(
            nontrivial=probe.bounded, bounded=probe.bounded,
            dimensionality=AtLeast(0), dimensionality_exact=False,
            threshold=AtLeast(n_max), threshold_exact=False,
            rank_sequence=ranks,
            bounded_rank=bounded_rank(oracle) if probe.bounded else None,
            n_max=n_max)
    d = witness.min_degree() - 1
    t = witness.n - 1
    bounded = d == 0
    if bounded != probe.bounded:
        raise FamilyAxiomError(f"circuit {witness!r} and forest probe disagree on boundedness")
    if bounded:
        # a bounded family is fully determined by one horizon-free fact
        exact = True
    else:
        exact = _documented(oracle) == (d, t)
    return FamilyProfile(
        nontrivial=True, bounded=bounded,
        dimensionality=d, dimensionality_exact=exact,
        threshold=t, threshold_exact=exact,
        rank_sequence=ranks,
        bounded_rank=bounded_rank(oracle) if bounded else None,
        witness_circuit=witness, n_max=n_max)


def small_circuit_min_degree_one(oracle: Oracle, r: Optional[int] = None
                                 ) -> Optional[tuple[int, Graph]]:
    """Smallest circuit with at most r(M) edges and a vertex of degree one.

    Such a circuit must be a star; anything else is reported as a family
    axiom failure.
    """
    if r is None:
        r = bounded_rank(oracle)
    for m in range(1, r + 1):
        for g in enumerate_graphs_by_edges(m, filter=lambda h: h.min_degree() == 1):
            if oracle.is_independent(g) or not is_circuit(oracle, g):
                continue
            if not is_isomorphic(g, star_graph(m)):
                raise FamilyAxiomError(f"small circuit {g!r} with a degree-one vertex is not a star")
            return m, g
    return None


def is_k_redundantly_rigid(oracle: Oracle, G: Graph, k: int, drop_isolated: bool = True) -> bool:
    """Rigid, and rigid after deleting any at most k vertices.

    With ``drop_isolated`` (the default) vertices left isolated by a deletion
    are discarded before the rigidity test.  Otherwise G - S must be rigid on
    all of V(G) - S, so a vertex stranded by the deletion makes it non-rigid.
    """
    if k < 0 or G.n < k + 2:
        raise InvalidArgumentError(f"need k >= 0 and at least k+2 vertices, got k={k}, n={G.n}")
    if not is_rigid(oracle, G):
        return False
    for size in range(1, k + 1):
        for S in itertools.combinations(G.vertices, size):
            H = G.delete_vertices(S, keep_isolated=not drop_isolated)
            target = complete_on(H.vertices).edges
            if oracle.rank_edges(H.edges) != oracle.rank_edges(target):
                return False
    return True


def classify_abstract_rigidity(profile: FamilyProfile, oracle: Oracle) -> bool:
    """True iff t = d + 1; cross-checked against K_{d+2} being a circuit."""
    if not profile.exact:
        raise PreconditionError("classification needs an exact profile")
    if profile.bounded or not profile.nontrivial:
        raise PreconditionError("classification needs a nontrivial unbounded family")
    d, t = profile.dimensionality, profile.threshold
    verdict = t == d + 1
    if verdict != is_circuit(oracle, complete_graph(d + 2)):
        raise FamilyAxiomError(f"t = d + 1 is {verdict} but K_{d + 2} circuit test disagrees")
    return verdict


@dataclass
class ExtendabilityVerdict:
    checked: int
    counterexample: Optional[tuple] = None  # (G, uv, extra)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        if self.ok:
            return f"no counterexample found ({self.checked} splits checked)"
        G, uv, extra = self.counterexample
        return f"counterexample: split {uv} of {G!r} with extra {sorted(extra)}"


def _splits_of(oracle: Oracle, G: Graph, d: int, verdict: ExtendabilityVerdict,
               extras_cap: Optional[int] = None, rng: Optional[random.Random] = None) -> bool:
    for uv in G.edge_list:
        others = [x for x in G.vertices if x not in uv]
        if len(others) < d - 1:
            continue
        combos = list(itertools.combinations(others, d - 1))
        if rng is not None and extras_cap is not None and len(combos) > extras_cap:
            combos = rng.sample(combos, extras_cap)
        for extra in combos:
            verdict.checked += 1
            if not oracle.is_independent(edge_split(G, uv, extra, d)):
                verdict.counterexample = (G, uv, frozenset(extra))
                return False
    return True


def probe_one_extendability(oracle: Oracle, d: int, n_max: int, samples: int = 0,
                            seed: int = 0) -> ExtendabilityVerdict:
    """Apply every d-dimensional edge split to every independent graph on at
    most ``n_max`` vertices, then to ``samples`` random independent graphs on
    n_max + 1 or n_max + 2 vertices, looking for a split that breaks
    independence."""
    if d < 1:
        raise InvalidArgumentError("edge splits need d >= 1")
    verdict = ExtendabilityVerdict(0)
    for g in enumerate_graphs(n_max):
        if g.n < 2 or not oracle.is_independent(g):
            continue
        if not _splits_of(oracle, g, d, verdict):
            return verdict
    rng = random.Random(seed)
    for _ in range(samples):
        n = n_max + rng.choice((1, 2))
        edges = list(complete_graph(n).edge_list)
        rng.shuffle(edges)
        basis: list = []
        for e in edges:
            if rng.random() < 0.7 and oracle.independent_edges(basis + [e]):
                basis.append(e)
        g = Graph(basis)
        if g.m == 0:
            continue
        if not _splits_of(oracle, g, d, verdict, extras_cap=3, rng=rng):
            return verdict
    return verdict


def find_removable_vertex(oracle: Oracle, G: Graph, d: int) -> Optional[int]:
    """A vertex v with r(G) <= r(G - v) + d, by direct search."""
    total = oracle.rank_edges(G.edges)
    for v in G.vertices:
        if total <= oracle.rank_edges(G.delete_vertices([v]).edges) + d:
            return v
    return None


def r_zero(oracle: Oracle, d: int, t: int) -> int:
    """r(K_t) - d t; may be negative."""
    return complete_rank(oracle, t) - d * t


def removable_vertex_degree_bound(oracle: Oracle, d: int, t: int) -> int:
    """6 max(6 r_0, t), the minimum degree from which a removable vertex is
    guaranteed."""
    return 6 * max(6 * r_zero(oracle, d, t), t)
