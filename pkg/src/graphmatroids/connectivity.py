"""Vertical separations and vertical connectivity of M(G), and falsification
harnesses relating them to vertex connectivity and redundant rigidity."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .errors import FamilyAxiomError, InvalidArgumentError, ResourceLimitError
from .graph import Edge, Graph, complete_graph, enumerate_graphs, norm_edge, vertex_connectivity
from .matroid import Oracle, complete_rank
from .structure import is_k_redundantly_rigid

SEPARATION_EDGE_CAP = 20


@dataclass(frozen=True)
class VerticalSeparation:
    E1: frozenset
    E2: frozenset
    k: int
    r1: int
    r2: int
    r: int

    def to_json(self) -> dict:
        return {
            "E1": [list(e) for e in sorted(self.E1)],
            "E2": [list(e) for e in sorted(self.E2)],
            "k": self.k, "r1": self.r1, "r2": self.r2, "r": self.r,
        }


def certify_separation(oracle: Oracle, G: Graph, E1: Iterable[Edge], E2: Iterable[Edge],
                       k: int) -> VerticalSeparation:
    """Build a separation after re-checking both inequalities with fresh
    oracle rank calls."""
    A = frozenset(norm_edge(*e) for e in E1)
    B = frozenset(norm_edge(*e) for e in E2)
    if A & B or (A | B) != G.edges or not A or not B:
        raise InvalidArgumentError("E1, E2 must be a bipartition of E(G) into nonempty sets")
    r1, r2, r = oracle.rank_edges(A), oracle.rank_edges(B), oracle.rank_edges(G.edges)
    if k < 1 or r1 < k or r2 < k or r1 + r2 > r + k - 1:
        raise FamilyAxiomError(f"not a vertical {k}-separation: r1={r1}, r2={r2}, r={r}")
    return VerticalSeparation(A, B, k, r1, r2, r)


def _check_cap(G: Graph, cap: int):
    if G.m > cap:
        raise ResourceLimitError(f"separation search capped at {cap} edges")


def _bipartitions(G: Graph) -> Iterator[tuple[list[Edge], list[Edge]]]:
    """Every unordered bipartition into nonempty sides, smaller side first
    and in lexicographic order of edge index sets."""
    from itertools import combinations
    edges = G.edge_list
    m = len(edges)
    for size in range(1, m // 2 + 1):
        for combo in combinations(range(m), size):
            if 2 * size == m and 0 not in combo:
                continue
            chosen = set(combo)
            yield ([edges[i] for i in combo], [edges[i] for i in range(m) if i not in chosen])


def find_vertical_separation(oracle: Oracle, G: Graph, k: int,
                             cap: int = SEPARATION_EDGE_CAP) -> Optional[VerticalSeparation]:
    """A vertical k-separation (with parameter exactly k), or None."""
    _check_cap(G, cap)
    if k < 1:
        raise InvalidArgumentError("k must be positive")
    r = oracle.rank_edges(G.edges)
    for A, B in _bipartitions(G):
        # ranks are bounded by sizes
        if len(A) < k or len(B) < k:
            continue
        r1 = oracle.rank_edges(A)
        if r1 < k:
            continue
        r2 = oracle.rank_edges(B)
        if r2 >= k and r1 + r2 <= r + k - 1:
            return certify_separation(oracle, G, A, B, k)
    return None


@dataclass
class VerticalConnectivityReport:
    connectivity: int
    rank: int
    # smallest separation parameter found, if any, with its certificate
    smallest_parameter: Optional[int] = None
    separation: Optional[VerticalSeparation] = None


def _smallest_separation(oracle: Oracle, G: Graph, below: Optional[int] = None):
    """Bipartition with the smallest separation parameter.  With ``below``,
    stop at the first parameter smaller than it."""
    r = oracle.rank_edges(G.edges)
    best = None
    for A, B in _bipartitions(G):
        r1 = oracle.rank_edges(A)
        r2 = oracle.rank_edges(B)
        low = max(1, r1 + r2 - r + 1)
        if low > min(r1, r2):
            continue
        if best is None or low < best[0]:
            best = (low, A, B)
            if low == 1 or (below is not None and low < below):
                break
    return r, best


def vertical_connectivity_report(oracle: Oracle, G: Graph,
                                 cap: int = SEPARATION_EDGE_CAP) -> VerticalConnectivityReport:
    _check_cap(G, cap)
    r, best = _smallest_separation(oracle, G)
    if r == 0:
        raise InvalidArgumentError("vertical connectivity is undefined for rank 0")
    if best is None:
        return VerticalConnectivityReport(r, r)
    low, A, B = best
    sep = certify_separation(oracle, G, A, B, low)
    return VerticalConnectivityReport(min(r, low), r, low, sep)


def vertical_connectivity(oracle: Oracle, G: Graph, cap: int = SEPARATION_EDGE_CAP) -> int:
    """Largest k <= r(G) such that M(G) has no vertical k'-separation with k' < k."""
    return vertical_connectivity_report(oracle, G, cap).connectivity


def is_vertically_connected(oracle: Oracle, G: Graph, k: int,
                            cap: int = SEPARATION_EDGE_CAP) -> bool:
    """Whether M(G) is vertically k-connected; stops at the first witness."""
    _check_cap(G, cap)
    r, best = _smallest_separation(oracle, G, below=k)
    if r == 0:
        raise InvalidArgumentError("vertical connectivity is undefined for rank 0")
    return k <= r and (best is None or best[0] >= k)


def relaxed_separation_to_strict(oracle: Oracle, G: Graph, E1: Iterable[Edge],
                                 E2: Iterable[Edge], k: int) -> VerticalSeparation:
    """Turn a covering pair (E1, E2), possibly overlapping, that satisfies
    both inequalities for k into a genuine separation (E1, E2 - E1)."""
    A = frozenset(norm_edge(*e) for e in E1)
    B = frozenset(norm_edge(*e) for e in E2)
    if (A | B) != G.edges or not (A | B) <= G.edges:
        raise InvalidArgumentError("E1 and E2 must cover E(G) exactly")
    r1, r2, r = oracle.rank_edges(A), oracle.rank_edges(B), oracle.rank_edges(G.edges)
    if k < 1 or r1 < k or r2 < k or r1 + r2 > r + k - 1:
        raise InvalidArgumentError(f"inputs violate the separation inequalities for k={k}")
    B2 = B - A
    if not B2:
        raise InvalidArgumentError("E2 - E1 is empty")
    k2 = k - (r2 - oracle.rank_edges(B2))
    return certify_separation(oracle, G, A, B2, k2)


def check_min_degree_bound(oracle: Oracle, G: Graph, k: int, d: Optional[int] = None) -> bool:
    """Vertical k-connectivity of M(G) forces minimum degree >= k + d - 1."""
    if k < 2:
        raise InvalidArgumentError("k must be at least 2")
    if d is None:
        from .families import documented_profile
        prof = documented_profile(oracle.spec)
        if prof is None:
            raise InvalidArgumentError("dimensionality unknown; pass d explicitly")
        d = prof[0]
    if not is_vertically_connected(oracle, G, k):
        return True
    return G.min_degree() >= k + d - 1


# ---------------------------------------------------------------------------
# Harnesses
# ---------------------------------------------------------------------------

@dataclass
class HarnessReport:
    name: str
    checked: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def graphic_vertical_connectivity_harness(n_max: int = 6) -> HarnessReport:
    """Vertical connectivity of the graphic matroid against vertex
    connectivity on connected graphs with at least two edges."""
    from .families import Graphic, make_oracle
    oracle = make_oracle(Graphic())
    report = HarnessReport("graphic-vertical-conn")
    for g in enumerate_graphs(n_max):
        if g.m < 2 or not g.is_connected():
            continue
        report.checked += 1
        vc = vertical_connectivity(oracle, g)
        kappa = vertex_connectivity(g)
        if vc != kappa:
            report.counterexamples.append((g, vc, kappa))
    return report


def prop35_harness(oracle: Oracle, d: int, t: int, n_max: int = 6,
                   edge_cap: int = 14) -> HarnessReport:
    """With k = t: vertical (r(K_k) + 2)-connectivity of M(G) should force
    (k+1)-vertex-connectivity of G."""
    k = t
    target = complete_rank(oracle, k) + 2
    report = HarnessReport("prop35-harness")
    for g in enumerate_graphs(n_max):
        if g.m > edge_cap:
            report.skipped += 1
            continue
        if oracle.rank_edges(g.edges) < target:
            # vertical target-connectivity needs rank >= target
            continue
        report.checked += 1
        if is_vertically_connected(oracle, g, target) and vertex_connectivity(g) < k + 1:
            report.counterexamples.append((g, k))
    return report


def prop36_harness(oracle: Oracle, t: int, ks: Iterable[int] = (1, 2), n_max: int = 6,
                   edge_cap: int = 14) -> HarnessReport:
    """k-connected, k-vertex-redundantly rigid hosts with >= k + t vertices
    should have vertically (k+1)-connected matroids.  Rigidity after deleting
    S is judged on all of V(G) - S."""
    report = HarnessReport("prop36-harness")
    for k in ks:
        for g in enumerate_graphs(n_max):
            if g.n < k + t or vertex_connectivity(g) < k:
                continue
            if g.m > edge_cap:
                report.skipped += 1
                continue
            if not is_k_redundantly_rigid(oracle, g, k, drop_isolated=False):
                continue
            report.checked += 1
            if not is_vertically_connected(oracle, g, k + 1):
                report.counterexamples.append((g, k))
    return report
