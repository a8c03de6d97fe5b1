"""Unions of graph matroid families.

Independence in the union is decided by the matroid partition algorithm:
edges are inserted one at a time, and each insertion searches the exchange
graph breadth-first for a shortest augmenting path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import FamilyAxiomError, InvalidArgumentError
from .graph import Edge, Graph
from .matroid import Oracle, is_rigid


@dataclass(frozen=True)
class Partition:
    """Pairwise disjoint edge sets; part i is independent for family i."""

    parts: tuple[frozenset, ...]

    def covered(self) -> frozenset:
        out: frozenset = frozenset()
        for p in self.parts:
            out |= p
        return out

    def is_valid_for(self, oracles: Sequence[Oracle], edges) -> bool:
        total = sum(len(p) for p in self.parts)
        return (len(self.parts) == len(oracles)
                and total == len(self.covered())
                and self.covered() == frozenset(edges)
                and all(o.independent_edges(p) for o, p in zip(oracles, self.parts)))


class _PartitionState:
    def __init__(self, oracles: Sequence[Oracle]):
        self.oracles = list(oracles)
        self.parts: list[set] = [set() for _ in oracles]
        self.where: dict[Edge, int] = {}

    def insert(self, y: Edge) -> bool:
        """Try to add y to the partitioned set; True on success."""
        parent: dict[Edge, Optional[tuple[Edge, int]]] = {y: None}
        queue = deque([y])
        while queue:
            x = queue.popleft()
            for i, oracle in enumerate(self.oracles):
                part = self.parts[i]
                if x in part:
                    continue
                if oracle.independent_edges(part | {x}):
                    self._augment(x, i, parent)
                    return True
                for z in sorted(part):
                    if z not in parent and oracle.independent_edges((part - {z}) | {x}):
                        parent[z] = (x, i)
                        queue.append(z)
        return False

    def _augment(self, x: Edge, i: int, parent) -> None:
        # x enters part i; then walk back, each displaced element's
        # predecessor takes its place
        moves = [(x, i)]
        z = x
        while parent[z] is not None:
            w, j = parent[z]
            moves.append((w, j))
            z = w
        for elem, part in moves:
            old = self.where.get(elem)
            if old is not None:
                self.parts[old].discard(elem)
        for elem, part in moves:
            self.parts[part].add(elem)
            self.where[elem] = part

    def partition(self) -> Partition:
        return Partition(tuple(frozenset(p) for p in self.parts))


def union_independent(parts: Sequence[Oracle], G: Graph) -> Optional[Partition]:
    """A certifying partition of E(G) into sets independent in the
    respective families, or None when E(G) is dependent in the union."""
    if not parts:
        raise InvalidArgumentError("union needs at least one part")
    state = _PartitionState(parts)
    for e in G.edge_list:
        if not state.insert(e):
            return None
    result = state.partition()
    if not result.is_valid_for(parts, G.edges):
        raise FamilyAxiomError("augmenting path produced an invalid partition")
    return result


def union_basis(parts: Sequence[Oracle], G: Graph) -> tuple[list[Edge], Partition]:
    """Greedy basis of the union matroid on E(G) and its partition."""
    state = _PartitionState(parts)
    basis = [e for e in G.edge_list if state.insert(e)]
    return basis, state.partition()


def union_rank(parts: Sequence[Oracle], G: Graph) -> int:
    return len(union_basis(parts, G)[0])


def union_threshold_bound(profiles: Sequence[Optional[tuple[int, int]]]) -> int:
    """Sum over the parts of max(t_i, 2 d_i)."""
    total = 0
    for prof in profiles:
        if prof is None or prof[1] is None or prof[0] is None:
            raise InvalidArgumentError("trivial family (no profile) in union")
        d, t = prof
        if d < 0 or t < 1:
            raise InvalidArgumentError(f"invalid profile {prof}")
        total += max(t, 2 * d)
    return total


def construct_rigid_partition(specs: Sequence, n: int,
                              profiles: Optional[Sequence[tuple[int, int]]] = None) -> list[Graph]:
    """Edge-disjoint spanning subgraphs G_1..G_k of K_n, G_i rigid for
    family i.

    The vertex set 0..n-1 is cut into consecutive blocks V_i = V_i^1 u V_i^2
    with |V_i^1| = floor(a_i/2), |V_i^2| = ceil(a_i/2), a_i = max(t_i, 2d_i);
    leftover vertices join the last V_k^2.  G_i is complete on V_i, joins
    V_i^j to V_l^j for l < i and V_i^j to V_l^(3-j) for l > i.
    """
    from .families import documented_profile, make_oracle

    if profiles is None:
        profiles = [documented_profile(s) for s in specs]
    if len(profiles) != len(specs):
        raise InvalidArgumentError("one profile per spec is required")
    bound = union_threshold_bound(profiles)
    if n < bound:
        raise InvalidArgumentError(f"n={n} is below the bound {bound}")
    blocks: list[tuple[list[int], list[int]]] = []
    start = 0
    for idx, (d, t) in enumerate(profiles):
        a = max(t, 2 * d)
        half = a // 2
        first = list(range(start, start + half))
        second = list(range(start + half, start + a))
        start += a
        if idx == len(profiles) - 1:
            second += list(range(start, n))
        blocks.append((first, second))

    def between(A, B):
        return [(min(u, v), max(u, v)) for u in A for v in B]

    graphs = []
    for i, (A1, A2) in enumerate(blocks):
        own = A1 + A2
        es = [(u, v) for a, u in enumerate(own) for v in own[a + 1:]]
        for l, (B1, B2) in enumerate(blocks):
            if l < i:
                es += between(A1, B1) + between(A2, B2)
            elif l > i:
                es += between(A1, B2) + between(A2, B1)
        graphs.append(Graph(es))
    for spec, Gi in zip(specs, graphs):
        if not is_rigid(make_oracle(spec), Gi):
            raise FamilyAxiomError(f"constructed subgraph is not rigid for {spec}")
    return graphs
