"""Matroid isomorphisms between graphs and reconstructibility of graphs from
their matroids."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import FamilyAxiomError, InvalidArgumentError, ResourceLimitError
from .graph import Edge, Graph, enumerate_graphs_by_edges, is_isomorphic, norm_edge
from .matroid import Oracle, bridges, circuits

ISOMORPHISM_EDGE_CAP = 10
RECONSTRUCTION_EDGE_CAP = 8


@dataclass(frozen=True)
class EdgeBijection:
    """A bijection psi: E(G) -> E(H), stored as sorted (edge, image) pairs."""

    pairs: tuple

    @classmethod
    def from_dict(cls, mapping: dict) -> "EdgeBijection":
        images = list(mapping.values())
        if len(set(images)) != len(images):
            raise InvalidArgumentError("edge map is not injective")
        return cls(tuple(sorted((norm_edge(*a), norm_edge(*b)) for a, b in mapping.items())))

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def __call__(self, e: Edge) -> Edge:
        return self.as_dict()[norm_edge(*e)]

    def image(self, edges) -> frozenset:
        d = self.as_dict()
        return frozenset(d[norm_edge(*e)] for e in edges)

    def to_json(self) -> list:
        return [[list(a), list(b)] for a, b in self.pairs]


@dataclass
class ReconstructionVerdict:
    reconstructible: bool
    witness: Optional[tuple] = None  # (H, psi)
    # candidate hosts had at most this many vertices; the verdict is relative to it
    max_host_vertices: int = 0
    hosts_checked: int = 0
    isomorphisms_checked: int = 0

    def to_json(self) -> dict:
        out = {
            "reconstructible": self.reconstructible,
            "horizon_max_host_vertices": self.max_host_vertices,
            "hosts_checked": self.hosts_checked,
            "isomorphisms_checked": self.isomorphisms_checked,
            "witness": None,
        }
        if self.witness is not None:
            H, psi = self.witness
            out["witness"] = {"edge_list": [list(e) for e in H.edge_list],
                              "bijection": psi.to_json()}
        return out


def _signatures(circs, edges) -> dict:
    """Per edge: sorted (circuit size, count) pairs over circuits containing it."""
    counts = {e: Counter() for e in edges}
    for c in circs:
        for e in c:
            counts[e][len(c)] += 1
    return {e: tuple(sorted(cnt.items())) for e, cnt in counts.items()}


def _pair_signatures(circs) -> dict:
    """Per unordered edge pair: sorted (circuit size, count) pairs over
    circuits containing both edges."""
    counts: dict = {}
    for c in circs:
        n = len(c)
        for a, b in itertools.combinations(sorted(c), 2):
            counts.setdefault((a, b), Counter())[n] += 1
    return {k: tuple(sorted(v.items())) for k, v in counts.items()}


def _edge_order(G: Graph) -> list[Edge]:
    """Edges so that each one shares a vertex with an earlier one when
    possible; circuits then complete early in the backtracking."""
    remaining = set(G.edges)
    order: list[Edge] = []
    seen: set = set()
    while remaining:
        touching = [e for e in remaining if e[0] in seen or e[1] in seen]
        e = min(touching) if touching else min(remaining)
        order.append(e)
        remaining.discard(e)
        seen.update(e)
    return order


def matroid_isomorphisms(oracle: Oracle, G: Graph, H: Graph, limit: Optional[int] = None,
                         cap: int = ISOMORPHISM_EDGE_CAP) -> Iterator[EdgeBijection]:
    """Bijections E(G) -> E(H) that carry the circuits of M(G) exactly onto
    the circuits of M(H), i.e. matroid isomorphisms.

    Backtracking assigns edges one at a time; candidates must share the
    per-edge circuit signature, and every circuit whose edges are all
    assigned must map to a circuit.
    """
    if G.m != H.m:
        return
    if G.m > cap:
        raise ResourceLimitError(f"matroid isomorphism search capped at {cap} edges")
    if G.m == 0:
        yield EdgeBijection(())
        return
    host_cap = max(cap, 20)
    cg = circuits(oracle, G, max_edges=G.m, host_cap=host_cap)
    ch = cg if H == G else circuits(oracle, H, max_edges=H.m, host_cap=host_cap)
    if sorted(len(c) for c in cg) != sorted(len(c) for c in ch):
        return
    sig_g = _signatures(cg, G.edges)
    sig_h = _signatures(ch, H.edges)
    if sorted(sig_g.values()) != sorted(sig_h.values()):
        return
    ch_set = set(ch)
    pair_g = _pair_signatures(cg)
    pair_h = pair_g if ch is cg else _pair_signatures(ch)
    order = _edge_order(G)
    pos = {e: i for i, e in enumerate(order)}
    closing: list[list[frozenset]] = [[] for _ in order]
    for c in cg:
        closing[max(pos[e] for e in c)].append(c)
    by_sig: dict = {}
    for e in H.edge_list:
        by_sig.setdefault(sig_h[e], []).append(e)
    psi: dict = {}
    used: set = set()
    emitted = 0

    def extend(i):
        nonlocal emitted
        if i == len(order):
            emitted += 1
            yield EdgeBijection.from_dict(psi)
            return
        e = order[i]
        for f in by_sig[sig_g[e]]:
            if f in used:
                continue
            # edge pairs must keep their joint circuit counts
            if any(pair_g.get((min(e, x), max(e, x)), ())
                   != pair_h.get((min(f, psi[x]), max(f, psi[x])), ())
                   for x in order[:i]):
                continue
            psi[e] = f
            if all(frozenset(psi[x] for x in c) in ch_set for c in closing[i]):
                used.add(f)
                yield from extend(i + 1)
                used.discard(f)
                if limit is not None and emitted >= limit:
                    del psi[e]
                    return
            del psi[e]

    yield from extend(0)


def is_matroid_isomorphism(oracle: Oracle, G: Graph, H: Graph, psi: EdgeBijection,
                           cap: int = 20) -> bool:
    """Check that psi carries the circuit set of M(G) onto that of M(H)."""
    d = psi.as_dict()
    if set(d) != set(G.edges) or set(d.values()) != set(H.edges):
        return False
    cg = circuits(oracle, G, max_edges=G.m, host_cap=cap)
    ch = set(circuits(oracle, H, max_edges=H.m, host_cap=cap))
    return len(cg) == len(ch) and all(frozenset(d[e] for e in c) in ch for c in cg)


def _require_no_isolated(*graphs: Graph):
    for g in graphs:
        if g.has_isolated_vertices():
            raise InvalidArgumentError("graphs must not have isolated vertices")


def _star_candidates(G: Graph, H: Graph, psi: EdgeBijection) -> Optional[dict]:
    d = psi.as_dict()
    stars_h: dict = {}
    for x in H.vertices:
        stars_h.setdefault(H.star(x), []).append(x)
    cands = {}
    for v in G.vertices:
        image = frozenset(d[e] for e in G.star(v))
        options = stars_h.get(image)
        if not options:
            return None
        cands[v] = options
    return cands


def star_preserving(G: Graph, H: Graph, psi: EdgeBijection) -> bool:
    """Every vertex star of G is mapped onto some vertex star of H."""
    _require_no_isolated(G, H)
    return _star_candidates(G, H, psi) is not None


def _assemble(G: Graph, H: Graph, psi: EdgeBijection, cands: dict) -> Optional[dict]:
    """Backtrack over the candidate images for a vertex bijection phi with
    psi(uv) = phi(u)phi(v) on every edge."""
    if G.n != H.n:
        return None
    d = psi.as_dict()
    verts = sorted(G.vertices, key=lambda v: (len(cands[v]), v))
    phi: dict = {}
    used: set = set()

    def ok(v):
        for w in G.neighbors(v):
            if w in phi:
                if d[norm_edge(v, w)] != norm_edge(phi[v], phi[w]):
                    return False
        return True

    def extend(i):
        if i == len(verts):
            return True
        v = verts[i]
        for x in cands[v]:
            if x in used:
                continue
            phi[v] = x
            if ok(v):
                used.add(x)
                if extend(i + 1):
                    return True
                used.discard(x)
            del phi[v]
        return False

    return dict(phi) if extend(0) else None


def induced_by_graph_isomorphism(G: Graph, H: Graph, psi: EdgeBijection) -> Optional[dict]:
    """A graph isomorphism phi inducing psi, or None.

    phi(v) must be a vertex whose star is the image of the star of v, so
    psi has to preserve stars; the candidates are then assembled into a
    bijection (only the two ends of a K_2 component are ambiguous).
    """
    _require_no_isolated(G, H)
    cands = _star_candidates(G, H, psi)
    if cands is None:
        return None
    phi = _assemble(G, H, psi, cands)
    if phi is not None and not _induces(G, psi, phi):
        raise FamilyAxiomError("assembled vertex map does not induce psi")
    return phi


def _induces(G: Graph, psi: EdgeBijection, phi: dict) -> bool:
    d = psi.as_dict()
    return all(d[(u, v)] == norm_edge(phi[u], phi[v]) for u, v in G.edges)


def induced_exhaustive(G: Graph, H: Graph, psi: EdgeBijection) -> Optional[dict]:
    """Independent check: search every vertex bijection, restricted only by
    the necessary condition that phi(v) is an endpoint of psi(e) for every
    edge e at v."""
    if G.n != H.n:
        return None
    d = psi.as_dict()
    cands = {}
    for v in G.vertices:
        options = set(H.vertices)
        for e in G.star(v):
            options &= set(d[e])
        cands[v] = sorted(options)
    return _assemble(G, H, psi, cands)


def is_reconstructible(oracle: Oracle, G: Graph, n_extra: int = 2,
                       cap: int = RECONSTRUCTION_EDGE_CAP) -> ReconstructionVerdict:
    """Check that every matroid isomorphism from M(G) to M(H) is induced by
    a graph isomorphism, for all hosts H with |E(G)| edges, no isolated
    vertices and at most |V(G)| + n_extra vertices.

    The first non-induced isomorphism found is returned as the witness after
    an exhaustive re-check over vertex bijections.
    """
    _require_no_isolated(G)
    if G.m > cap:
        raise ResourceLimitError(f"reconstructibility check capped at {cap} edges")
    if n_extra < 0:
        raise InvalidArgumentError("n_extra must be nonnegative")
    max_v = G.n + n_extra
    verdict = ReconstructionVerdict(True, max_host_vertices=max_v)
    if G.m == 0:
        return verdict
    r = oracle.rank_edges(G.edges)
    sizes = sorted(len(c) for c in circuits(oracle, G, max_edges=G.m))
    for H in enumerate_graphs_by_edges(G.m, max_vertices=max_v):
        if oracle.rank_edges(H.edges) != r:
            continue
        if sorted(len(c) for c in circuits(oracle, H, max_edges=H.m)) != sizes:
            continue
        verdict.hosts_checked += 1
        for psi in matroid_isomorphisms(oracle, G, H, cap=cap):
            verdict.isomorphisms_checked += 1
            if induced_by_graph_isomorphism(G, H, psi) is None:
                if induced_exhaustive(G, H, psi) is not None:
                    raise FamilyAxiomError("star criterion and exhaustive search disagree")
                verdict.reconstructible = False
                verdict.witness = (H, psi)
                return verdict
    return verdict


def bridge_witness(oracle: Oracle, G: Graph) -> Optional[tuple[Graph, Graph]]:
    """For a bridge e of M(G) and a vertex v off e, the graphs
    G1 = G - e + v u1 and G2 = G - e + u1 u2 (u1, u2 new).  Both matroids are
    isomorphic to M(G) while G1 and G2 are not isomorphic graphs."""
    from .families import is_bounded_spec
    if G.m < 2:
        raise InvalidArgumentError("need at least two edges")
    if is_bounded_spec(oracle.spec):
        raise InvalidArgumentError("bridge witnesses need an unbounded family")
    _require_no_isolated(G)
    u1 = max(G.vertices) + 1
    u2 = u1 + 1
    for e in sorted(bridges(oracle, G)):
        for v in G.vertices:
            if v in e:
                continue
            base = G.remove_edges([e])
            G1 = base.add_edges([(v, u1)])
            G2 = base.add_edges([(u1, u2)])
            rest = {f: f for f in G.edges if f != e}
            psi1 = EdgeBijection.from_dict({**rest, e: (v, u1)})
            psi2 = EdgeBijection.from_dict({**rest, e: (u1, u2)})
            if not (is_matroid_isomorphism(oracle, G, G1, psi1)
                    and is_matroid_isomorphism(oracle, G, G2, psi2)):
                raise FamilyAxiomError("pendant edge is not a bridge; family looks bounded")
            if is_isomorphic(G1, G2):
                raise FamilyAxiomError("bridge witness graphs are isomorphic")
            return G1, G2
    return None


def min_degree_one_subgraph(G: Graph, m: int) -> Optional[Graph]:
    """A subgraph with m edges and minimum degree one (no isolated vertices)."""
    if m < 1:
        raise InvalidArgumentError("m must be positive")
    if m > G.m:
        return None
    for v in G.vertices:
        if G.degree(v) >= m:
            return Graph(sorted(G.star(v))[:m])
    if G.m >= 2 * m - 1:
        v = min((x for x in G.vertices if G.degree(x) >= 1), key=lambda x: (G.degree(x), x))
        rest = sorted(G.delete_vertices([v]).edges)[:m - 1]
        w = min(G.neighbors(v))
        return Graph(rest + [norm_edge(v, w)])
    for combo in itertools.combinations(G.edge_list, m):
        H = Graph(combo)
        if H.min_degree() == 1:
            return H
    return None
