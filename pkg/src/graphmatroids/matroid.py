"""Independence oracles for graph matroid families and the operations that
only need oracle access: rank, circuits, bridges, closure, rigidity, and
exhaustive/sampled axiom checks."""

from __future__ import annotations

import itertools
import random
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

from .errors import InvalidArgumentError, ResourceLimitError
from .graph import Edge, Graph, complete_graph, complete_on, norm_edge

MEMO_LIMIT = 1 << 18
CIRCUIT_HOST_CAP = 20
CIRCUIT_SIZE_CAP = 12


class Oracle:
    """Executable independence oracle of a graph matroid family.

    ``is_independent`` must be a function of the isomorphism class of its
    argument.  ``rank_fn``, when given, computes the rank of an edge set
    directly and must agree with the greedy rank; it is only an accelerator.
    Verdicts on edge sets are memoised behind a lock.
    """

    def __init__(self, spec: Any, is_independent: Callable[[Graph], bool], seed: int = 0,
                 rank_fn: Optional[Callable[[frozenset], int]] = None):
        self.spec = spec
        self.seed = seed
        self._fn = is_independent
        self._rank_fn = rank_fn
        self._memo: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Oracle({self.spec})"

    def __call__(self, G: Graph) -> bool:
        return self.is_independent(G)

    def is_independent(self, G: Graph) -> bool:
        with self._lock:
            hit = self._memo.get(G)
        if hit is not None:
            return hit
        verdict = bool(self._fn(G))
        with self._lock:
            if len(self._memo) >= MEMO_LIMIT:
                self._memo.clear()
            self._memo[G] = verdict
        return verdict

    def independent_edges(self, edges: Iterable[Edge]) -> bool:
        return self.is_independent(Graph(edges))

    def rank_edges(self, edges: Iterable[Edge]) -> int:
        es = frozenset(edges)
        if not es:
            return 0
        if self._rank_fn is not None:
            return self._rank_fn(es)
        return len(greedy_basis(self, sorted(es)))

    @property
    def has_fast_rank(self) -> bool:
        return self._rank_fn is not None


def greedy_basis(oracle: Oracle, ordered_edges: Iterable[Edge]) -> list[Edge]:
    basis: list[Edge] = []
    for e in ordered_edges:
        if oracle.independent_edges(basis + [e]):
            basis.append(e)
    return basis


@dataclass(frozen=True)
class RankReport:
    rank: int
    # order-dependent: greedy over edges sorted by (min endpoint, max endpoint)
    basis: tuple[Edge, ...]


def _require_subset(G: Graph, E0) -> frozenset:
    es = frozenset(norm_edge(*e) for e in E0)
    if not es <= G.edges:
        raise InvalidArgumentError(f"edges not in host: {sorted(es - G.edges)}")
    return es


def rank(oracle: Oracle, G: Graph) -> RankReport:
    basis = greedy_basis(oracle, G.edge_list)
    return RankReport(len(basis), tuple(basis))


def rank_subset(oracle: Oracle, G: Graph, E0: Iterable[Edge]) -> int:
    return oracle.rank_edges(_require_subset(G, E0))


def complete_rank(oracle: Oracle, n: int) -> int:
    """r(K_n); r(K_0) = 0."""
    if n <= 1:
        return 0
    return oracle.rank_edges(complete_graph(n).edges)


def is_rigid(oracle: Oracle, G: Graph) -> bool:
    if G.has_isolated_vertices():
        raise InvalidArgumentError("rigidity is defined for graphs without isolated vertices")
    return oracle.rank_edges(G.edges) == oracle.rank_edges(complete_on(G.vertices).edges)


def is_circuit(oracle: Oracle, G: Graph) -> bool:
    """True when G is dependent but every G - e is independent."""
    if G.m == 0:
        return False
    deg = G.degrees()
    # edges at low-degree vertices tend to be bridges of a dependent graph,
    # so deleting them first finds a dependent G - e quickly
    edges = sorted(G.edge_list, key=lambda e: (min(deg[e[0]], deg[e[1]]), e))
    for i in range(len(edges)):
        if not oracle.independent_edges(edges[:i] + edges[i + 1:]):
            return False
    return not oracle.independent_edges(edges)


def circuits(oracle: Oracle, G: Graph, max_edges: Optional[int] = None,
             host_cap: int = CIRCUIT_HOST_CAP, size_cap: int = CIRCUIT_SIZE_CAP) -> list[frozenset]:
    """All circuits of M(G) with at most ``max_edges`` edges.

    Subsets are scanned by increasing size; a dependent subset is a circuit
    when every single-edge deletion of it is independent.  Circuits never
    exceed r(G) + 1 edges, which bounds the scan.
    """
    if G.m > host_cap:
        raise ResourceLimitError(f"circuit search capped at {host_cap} host edges")
    edges = G.edge_list
    limit = oracle.rank_edges(G.edges) + 1
    if max_edges is not None:
        limit = min(limit, max_edges)
    elif limit > size_cap:
        raise ResourceLimitError(f"circuits may have {limit} edges; cap is {size_cap}")
    out: list[frozenset] = []
    for size in range(1, min(limit, len(edges)) + 1):
        for combo in itertools.combinations(edges, size):
            if oracle.independent_edges(combo):
                continue
            if all(oracle.independent_edges(combo[:i] + combo[i + 1:]) for i in range(size)):
                out.append(frozenset(combo))
    return out


def bridges(oracle: Oracle, G: Graph) -> frozenset:
    """Edges lying in no circuit (coloops of M(G))."""
    total = oracle.rank_edges(G.edges)
    return frozenset(e for e in G.edge_list
                     if oracle.rank_edges(G.edges - {e}) == total - 1)


def closure(oracle: Oracle, G: Graph, E0: Iterable[Edge]) -> frozenset:
    """Closure of E0 inside the host G.  For closure in K_{V(G)}, pass that
    complete graph as host."""
    base = _require_subset(G, E0)
    r0 = oracle.rank_edges(base)
    return frozenset(e for e in G.edge_list
                     if e in base or oracle.rank_edges(base | {e}) == r0)


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------

@dataclass
class MatroidAxiomReport:
    n: int
    ok: bool
    subsets_checked: int
    hereditary_violation: Optional[tuple] = None
    exchange_violation: Optional[tuple] = None

    def summary(self) -> str:
        if self.ok:
            return f"matroid axioms hold on K_{self.n} ({self.subsets_checked} subsets)"
        parts = []
        if self.hereditary_violation:
            I, e = self.hereditary_violation
            parts.append(f"hereditary fails: {sorted(I)} independent but not without {e}")
        if self.exchange_violation:
            I, J = self.exchange_violation
            parts.append(f"exchange fails: I={sorted(I)} J={sorted(J)}")
        return "; ".join(parts)


def verify_matroid_axioms(oracle: Oracle, n: int, cap: int = 6) -> MatroidAxiomReport:
    """Exhaustively check the hereditary and exchange axioms on E(K_n).

    Exchange is checked for pairs with |J| = |I| + 1, which suffices when
    the hereditary property holds.  Both kinds of violation are reported.
    """
    if n > cap:
        raise ResourceLimitError(f"exhaustive axiom check capped at n={cap}")
    edges = complete_graph(n).edge_list
    m = len(edges)
    indep = bytearray(1 << m)
    for mask in range(1 << m):
        sub = [edges[i] for i in range(m) if (mask >> i) & 1]
        indep[mask] = 1 if oracle.independent_edges(sub) else 0

    def as_edges(mask):
        return frozenset(edges[i] for i in range(m) if (mask >> i) & 1)

    hered = None
    by_size: dict[int, list[int]] = {}
    for mask in range(1 << m):
        if not indep[mask]:
            continue
        by_size.setdefault(mask.bit_count(), []).append(mask)
        if hered is None:
            x = mask
            while x:
                low = x & -x
                if not indep[mask ^ low]:
                    hered = (as_edges(mask), edges[low.bit_length() - 1])
                    break
                x ^= low
    exch = None
    for s in sorted(by_size):
        bigger = by_size.get(s + 1, [])
        for I in by_size[s]:
            for J in bigger:
                d = J & ~I
                ok = False
                while d:
                    low = d & -d
                    if indep[I | low]:
                        ok = True
                        break
                    d ^= low
                if not ok:
                    exch = (as_edges(I), as_edges(J))
                    break
            if exch:
                break
        if exch:
            break
    return MatroidAxiomReport(n, hered is None and exch is None, 1 << m, hered, exch)


@dataclass
class FamilyAxiomReport:
    trials: int
    n: int
    seed: int
    invariance_violations: list = field(default_factory=list)
    compatibility_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.invariance_violations and not self.compatibility_violations


def _random_graph(rng: random.Random, n: int) -> Graph:
    return Graph(e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5)


def verify_family_axioms(oracle: Oracle, trials: int, n: int, seed: int) -> FamilyAxiomReport:
    """Sampled checks of isomorphism invariance and compatibility.

    Each trial draws a random graph on at most ``n`` vertices and compares
    (a) its verdict with that of a random relabelling onto scattered labels,
    (b) the verdict of a random edge subset on its own against the same
    subset carried inside the host's vertex set, and against hereditary
    consistency with the host verdict.
    """
    rng = random.Random(seed)
    report = FamilyAxiomReport(trials, n, seed)
    for _ in range(trials):
        G = _random_graph(rng, n)
        if G.m == 0:
            continue
        labels = rng.sample(range(3 * n + 3), G.n)
        mapping = dict(zip(G.vertices, labels))
        H = G.relabel(mapping)
        vg = oracle.is_independent(G)
        if vg != oracle.is_independent(H):
            report.invariance_violations.append((G, mapping))
        sub = [e for e in G.edge_list if rng.random() < 0.6]
        S = Graph(sub)
        vs = oracle.is_independent(S)
        embedded = Graph(sub, G.vertices)
        if vs != oracle.is_independent(embedded) or (vg and not vs):
            report.compatibility_violations.append((G, frozenset(sub)))
    return report
