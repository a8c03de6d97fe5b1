"""Finite simple graphs and the purely graph-theoretic operations.

Graphs are immutable values.  Vertex labels are non-negative integers and edges
are stored as sorted pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from .errors import InvalidArgumentError, ResourceLimitError

Edge = tuple[int, int]

DEFAULT_ENUMERATION_CAP = 8
DEFAULT_EDGE_ENUMERATION_CAP = 10
DEFAULT_ISOMORPHISM_CAP = 10


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidArgumentError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple graph with integer vertex labels.

    ``Graph(edges)`` takes its vertex set from the edge endpoints; pass
    ``vertices`` to add isolated vertices.
    """

    __slots__ = ("vertices", "edges", "_adj", "_hash", "_edge_list")

    def __init__(self, edges: Iterable = (), vertices: Optional[Iterable[int]] = None):
        es = set()
        for e in edges:
            u, v = e
            es.add(norm_edge(int(u), int(v)))
        vs = set()
        for u, v in es:
            vs.add(u)
            vs.add(v)
        if vertices is not None:
            vs.update(int(x) for x in vertices)
        if any(x < 0 for x in vs):
            raise InvalidArgumentError("vertex labels must be non-negative integers")
        self.vertices: tuple[int, ...] = tuple(sorted(vs))
        self.edges: frozenset[Edge] = frozenset(es)
        self._adj = None
        self._hash = None
        self._edge_list = None

    # -- basic accessors -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_list(self) -> list[Edge]:
        """Edges in the deterministic greedy order."""
        if self._edge_list is None:
            self._edge_list = sorted(self.edges)
        return list(self._edge_list)

    @property
    def adj(self) -> dict[int, frozenset[int]]:
        if self._adj is None:
            nb: dict[int, set] = {v: set() for v in self.vertices}
            for u, v in self.edges:
                nb[u].add(v)
                nb[v].add(u)
            self._adj = {v: frozenset(s) for v, s in nb.items()}
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def star(self, v: int) -> frozenset[Edge]:
        """Edges incident to ``v``."""
        return frozenset(norm_edge(v, w) for w in self.adj[v])

    def degrees(self) -> dict[int, int]:
        return {v: len(s) for v, s in self.adj.items()}

    def min_degree(self) -> int:
        if not self.vertices:
            return 0
        return min(len(s) for s in self.adj.values())

    def has_isolated_vertices(self) -> bool:
        return any(not s for s in self.adj.values())

    def is_normalized(self) -> bool:
        """True when the graph has no isolated vertices."""
        return not self.has_isolated_vertices()

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    # -- derived graphs --------------------------------------------------
    def without_isolated(self) -> "Graph":
        return Graph(self.edges)

    def delete_vertices(self, vs: Iterable[int], keep_isolated: bool = False) -> "Graph":
        drop = set(vs)
        es = [e for e in self.edges if e[0] not in drop and e[1] not in drop]
        if keep_isolated:
            return Graph(es, [v for v in self.vertices if v not in drop])
        return Graph(es)

    def add_edges(self, es: Iterable[Edge]) -> "Graph":
        return Graph(itertools.chain(self.edges, es), self.vertices)

    def remove_edges(self, es: Iterable[Edge], keep_isolated: bool = False) -> "Graph":
        drop = {norm_edge(*e) for e in es}
        rest = self.edges - drop
        return Graph(rest, self.vertices) if keep_isolated else Graph(rest)

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        return Graph(((mapping[u], mapping[v]) for u, v in self.edges),
                     (mapping[v] for v in self.vertices))

    def union(self, other: "Graph") -> "Graph":
        return Graph(self.edges | other.edges, set(self.vertices) | set(other.vertices))

    def components(self) -> list[list[int]]:
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    # -- dunder ----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self):
        iso = [v for v in self.vertices if not self.adj[v]]
        extra = f", isolated={iso}" if iso else ""
        return f"Graph({self.edge_list}{extra})"

    def __len__(self):
        return self.m


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidArgumentError("complete_graph needs n >= 1")
    return Graph(itertools.combinations(range(n), 2), range(n))


def complete_on(vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    return Graph(itertools.combinations(vs, 2), vs)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError("cycle needs n >= 3")
    return Graph((i, (i + 1) % n) for i in range(n))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise InvalidArgumentError("path needs n >= 1")
    return Graph(((i, i + 1) for i in range(n - 1)), range(n))


def star_graph(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    if m < 1:
        raise InvalidArgumentError("star needs m >= 1")
    return Graph((0, i) for i in range(1, m + 1))


def matching_graph(m: int) -> Graph:
    return Graph((2 * i, 2 * i + 1) for i in range(m))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph((i, a + j) for i in range(a) for j in range(b))


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; each argument is shifted past the previous labels."""
    edges = []
    verts = []
    offset = 0
    for g in graphs:
        mp = {v: offset + i for i, v in enumerate(g.vertices)}
        edges.extend((mp[u], mp[v]) for u, v in g.edges)
        verts.extend(mp.values())
        offset += g.n
    return Graph(edges, verts)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def induced_by_edges(G: Graph, E0: Iterable[Edge]) -> Graph:
    """The subgraph G[E0]: edge set E0 on the vertices it touches."""
    es = {norm_edge(*e) for e in E0}
    missing = es - G.edges
    if missing:
        raise InvalidArgumentError(f"edges not in graph: {sorted(missing)}")
    return Graph(es)


def cone(G: Graph) -> Graph:
    """Add one new vertex adjacent to every vertex of G."""
    apex = (max(G.vertices) + 1) if G.vertices else 0
    return Graph(itertools.chain(G.edges, ((v, apex) for v in G.vertices)),
                 itertools.chain(G.vertices, [apex]))


def edge_split(G: Graph, uv: Edge, extra: Iterable[int], d: int) -> Graph:
    """d-dimensional edge split: replace ``uv`` by a new vertex joined to
    ``u``, ``v`` and the ``d - 1`` vertices of ``extra``."""
    u, v = norm_edge(*uv)
    if d < 1:
        raise InvalidArgumentError("edge split needs d >= 1")
    if (u, v) not in G.edges:
        raise InvalidArgumentError(f"{(u, v)} is not an edge")
    extra = set(extra)
    if len(extra) != d - 1:
        raise InvalidArgumentError(f"need exactly {d - 1} extra vertices, got {len(extra)}")
    if extra & {u, v}:
        raise InvalidArgumentError("extra vertices must avoid the split edge")
    if not extra <= set(G.vertices):
        raise InvalidArgumentError("extra vertices must belong to the graph")
    w = max(G.vertices) + 1
    es = set(G.edges)
    es.discard((u, v))
    es.update(norm_edge(w, x) for x in extra | {u, v})
    return Graph(es, itertools.chain(G.vertices, [w]))


def _local_connectivity(adj: dict[int, frozenset[int]], s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (unit-capacity flow
    on the split digraph)."""
    # node (v, 0) = in, (v, 1) = out; in->out capacity 1 except s, t.
    cap: dict = {}

    def add(a, b, c):
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    big = len(adj) + 1
    for v in adj:
        add((v, 0), (v, 1), big if v in (s, t) else 1)
        for w in adj[v]:
            add((v, 1), (w, 0), big)
    src, snk = (s, 1), (t, 0)
    flow = 0
    while True:
        parent = {src: None}
        q = deque([src])
        while q and snk not in parent:
            x = q.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    q.append(y)
        if snk not in parent:
            return flow
        y = snk
        while parent[y] is not None:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1


def vertex_connectivity(G: Graph) -> int:
    """Size of a minimum vertex cut; kappa(K_n) = n - 1 by convention."""
    n = G.n
    if n < 2:
        raise InvalidArgumentError("vertex connectivity needs at least 2 vertices")
    if not G.is_connected():
        return 0
    if G.m == n * (n - 1) // 2:
        return n - 1
    adj = G.adj
    best = n - 1
    for s, t in itertools.combinations(G.vertices, 2):
        if t not in adj[s]:
            best = min(best, _local_connectivity(adj, s, t))
    return best


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

def _refine(cells: list[list[int]], adj: list[int]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & cm).bit_count() for cm in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                for sig in sorted(groups):
                    new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _leaf_bits(order: list[int], adj: list[int]) -> int:
    bits = 0
    n = len(order)
    for i in range(n):
        a = adj[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((a >> order[j]) & 1)
    return bits


def _connected_certificate(adj: list[int]) -> tuple[int, list[int]]:
    """Minimum adjacency bit-string over the labelings reachable by
    individualization/refinement, plus one labeling attaining it."""
    n = len(adj)
    if n == 1:
        return 0, [0]
    best: list = [None, None]

    def search(cells):
        cells = _refine(cells, adj)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            bits = _leaf_bits(order, adj)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            return
        seen_open = set()
        seen_closed = set()
        for v in cell:
            o = adj[v]
            c = o | (1 << v)
            # swapping twins inside a cell is an automorphism fixing the partition
            if o in seen_open or c in seen_closed:
                continue
            seen_open.add(o)
            seen_closed.add(c)
            rest = [w for w in cell if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    deg_groups: dict = {}
    for v in range(n):
        deg_groups.setdefault(adj[v].bit_count(), []).append(v)
    search([deg_groups[k] for k in sorted(deg_groups)])
    return best[0], best[1]


def _components_of_masks(adj: list[int]) -> list[list[int]]:
    n = len(adj)
    seen = 0
    comps = []
    for s in range(n):
        if (seen >> s) & 1:
            continue
        comp_mask = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~comp_mask
            comp_mask |= nxt
            frontier = nxt
        seen |= comp_mask
        comps.append([v for v in range(n) if (comp_mask >> v) & 1])
    return comps


def _canon_masks(adj: list[int]) -> tuple[tuple, list[int]]:
    """Canonical form and canonical vertex order of a graph given by adjacency
    bitmasks on vertices 0..n-1.

    The form is the sorted tuple of ``(size, bits)`` over components, so it is
    a complete isomorphism invariant.  The order lists original vertices in
    canonical position order.
    """
    comps = _components_of_masks(adj)
    parts = []
    for comp in comps:
        if len(comp) == 1:
            parts.append(((1, 0), comp))
            continue
        idx = {v: i for i, v in enumerate(comp)}
        local = []
        for v in comp:
            a = adj[v]
            m = 0
            for w in comp:
                if (a >> w) & 1:
                    m |= 1 << idx[w]
            local.append(m)
        bits, order = _connected_certificate(local)
        parts.append(((len(comp), bits), [comp[i] for i in order]))
    parts.sort(key=lambda p: (-p[0][0], p[0][1]))
    form = tuple(p[0] for p in parts)
    order = [v for p in parts for v in p[1]]
    return form, order


def _masks_of(G: Graph) -> tuple[list[int], dict[int, int]]:
    idx = {v: i for i, v in enumerate(G.vertices)}
    adj = [0] * G.n
    for u, v in G.edges:
        a, b = idx[u], idx[v]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj, idx


def _graph_from_masks(adj: list[int]) -> Graph:
    es = [(i, j) for i in range(len(adj)) for j in range(i + 1, len(adj)) if (adj[i] >> j) & 1]
    return Graph(es, range(len(adj)))


@lru_cache(maxsize=1 << 16)
def _canonical_cached(vertices: tuple, edges: frozenset) -> tuple[tuple, tuple]:
    G = Graph(edges, vertices)
    adj, _ = _masks_of(G)
    form, order = _canon_masks(adj)
    return form, tuple(G.vertices[i] for i in order)


def canonical_form(G: Graph) -> tuple:
    """A hashable, totally ordered complete isomorphism invariant of G.

    Isolated vertices count: they appear as single-vertex components.
    """
    return _canonical_cached(G.vertices, G.edges)[0]


def canonical_labeling(G: Graph) -> dict[int, int]:
    """Map each vertex of G to its position 0..n-1 in the canonical order."""
    order = _canonical_cached(G.vertices, G.edges)[1]
    return {v: i for i, v in enumerate(order)}


def canonical_graph(G: Graph) -> Graph:
    """The canonical representative of G's isomorphism class, on labels 0..n-1."""
    return G.relabel(canonical_labeling(G))


def find_isomorphism(G: Graph, H: Graph, cap: int = DEFAULT_ISOMORPHISM_CAP) -> Optional[dict[int, int]]:
    """A vertex bijection phi with phi(E(G)) = E(H), or None."""
    if max(G.n, H.n) > cap:
        raise ResourceLimitError(f"isomorphism search capped at {cap} vertices")
    if G.n != H.n or G.m != H.m:
        return None
    if sorted(G.degrees().values()) != sorted(H.degrees().values()):
        return None
    if canonical_form(G) != canonical_form(H):
        return None
    lg = canonical_labeling(G)
    inv_h = {i: v for v, i in canonical_labeling(H).items()}
    return {v: inv_h[i] for v, i in lg.items()}


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_form(G) == canonical_form(H)


def find_subgraph(pattern: Graph, host: Graph, cap: int = 16) -> Optional[dict[int, int]]:
    """An injective vertex map sending every edge of ``pattern`` to an edge of
    ``host`` (a not-necessarily-induced copy), or None.

    Backtracking in order of decreasing pattern degree, pruning on degree.
    """
    if host.n > cap:
        raise ResourceLimitError(f"subgraph search capped at {cap} vertices")
    if pattern.n > host.n or pattern.m > host.m:
        return None
    padj = pattern.adj
    hadj = host.adj
    # BFS-ish order: high degree first, then neighbours of placed vertices
    order: list[int] = []
    remaining = set(pattern.vertices)
    while remaining:
        placed = set(order)
        cands = [v for v in remaining if padj[v] & placed] or list(remaining)
        v = max(cands, key=lambda x: (len(padj[x] & placed), len(padj[x]), -x))
        order.append(v)
        remaining.discard(v)
    hdeg = {v: len(s) for v, s in hadj.items()}
    mapping: dict[int, int] = {}
    used: set = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        need = len(padj[v])
        placed_nb = [mapping[w] for w in padj[v] if w in mapping]
        if placed_nb:
            pool = set(hadj[placed_nb[0]])
            for x in placed_nb[1:]:
                pool &= hadj[x]
        else:
            pool = set(host.vertices)
        for x in sorted(pool):
            if x in used or hdeg[x] < need:
                continue
            mapping[v] = x
            used.add(x)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(x)
        return False

    return dict(mapping) if extend(0) else None


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _all_graphs_on(n: int) -> tuple[tuple[int, ...], ...]:
    """Adjacency masks of all graphs on exactly n vertices up to isomorphism,
    isolated vertices allowed.

    Every graph arises by adding a minimum-degree vertex to a graph on n - 1
    vertices, so only such augmentations are generated.
    """
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    out: dict = {}
    new = n - 1
    for base in _all_graphs_on(n - 1):
        deg = [a.bit_count() for a in base]
        lim = min(deg) + 1 if deg else 0
        for size in range(0, min(lim, n - 1) + 1):
            for S in itertools.combinations(range(n - 1), size):
                sset = set(S)
                if any(deg[u] + (u in sset) < size for u in range(n - 1)):
                    continue
                adj = list(base)
                m = 0
                for u in S:
                    adj[u] |= 1 << new
                    m |= 1 << u
                adj.append(m)
                form, order = _canon_masks(adj)
                if form not in out:
                    pos = {v: i for i, v in enumerate(order)}
                    canon = [0] * n
                    for v in range(n):
                        a = adj[v]
                        cm = 0
                        for w in range(n):
                            if (a >> w) & 1:
                                cm |= 1 << pos[w]
                        canon[pos[v]] = cm
                    out[form] = tuple(canon)
    return tuple(out[k] for k in sorted(out))


def _mask_edges(adj) -> int:
    return sum(a.bit_count() for a in adj) // 2


@lru_cache(maxsize=None)
def _normal_graphs_upto(n: int) -> tuple[Graph, ...]:
    graphs = []
    for k in range(2, n + 1):
        batch = [a for a in _all_graphs_on(k) if all(a)]
        batch.sort(key=lambda a: (_mask_edges(a), _canon_masks(list(a))[0]))
        graphs.extend(_graph_from_masks(list(a)) for a in batch)
    return tuple(graphs)


def enumerate_graphs(n: int, filter: Optional[Callable[[Graph], bool]] = None,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Graph]:
    """Every graph on at most ``n`` vertices without isolated vertices, once up
    to isomorphism, ordered by vertex count, edge count, canonical form."""
    if n > cap:
        raise ResourceLimitError(f"graph enumeration capped at {cap} vertices")
    if n < 2:
        return iter(())
    graphs = _normal_graphs_upto(n)
    if filter is None:
        return iter(graphs)
    return (g for g in graphs if filter(g))


def _edge_pair_key(adj, a, b):
    da, db = adj[a].bit_count(), adj[b].bit_count()
    return (da, db) if da <= db else (db, da)


@lru_cache(maxsize=None)
def _graphs_with_edges(m: int) -> tuple[tuple[int, ...], ...]:
    """Masks of all graphs with exactly m edges and no isolated vertices.

    A graph arises from the graph on m - 1 edges obtained by deleting an edge
    minimising (smaller endpoint degree, larger endpoint degree); candidates
    whose new edge is not such an edge are skipped.
    """
    if m == 0:
        return ((),)
    out: dict = {}
    for base in _graphs_with_edges(m - 1):
        n = len(base)
        cands = [(a, b) for a in range(n) for b in range(a + 1, n) if not (base[a] >> b) & 1]
        cands += [(a, n) for a in range(n)]
        cands.append((n, n + 1))
        for a, b in cands:
            size = max(n, b + 1)
            adj = list(base) + [0] * (size - n)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
            key = _edge_pair_key(adj, a, b)
            if any(_edge_pair_key(adj, x, y) < key
                   for x in range(size) for y in range(x + 1, size) if (adj[x] >> y) & 1):
                continue
            form, order = _canon_masks(adj)
            if form not in out:
                pos = {v: i for i, v in enumerate(order)}
                canon = [0] * size
                for v in range(size):
                    a_ = adj[v]
                    cm = 0
                    for w in range(size):
                        if (a_ >> w) & 1:
                            cm |= 1 << pos[w]
                    canon[pos[v]] = cm
                out[form] = tuple(canon)
    return tuple(out[k] for k in sorted(out, key=lambda f: (sum(c[0] for c in f), f)))


def enumerate_graphs_by_edges(m: int, max_vertices: Optional[int] = None,
                              filter: Optional[Callable[[Graph], bool]] = None,
                              cap: int = DEFAULT_EDGE_ENUMERATION_CAP) -> Iterator[Graph]:
    """Every graph with exactly ``m`` edges and no isolated vertices, once up
    to isomorphism, ordered by vertex count then canonical form."""
    if m > cap:
        raise ResourceLimitError(f"edge-count enumeration capped at {cap} edges")
    if m < 1:
        return
    for adj in _graphs_with_edges(m):
        if max_vertices is not None and len(adj) > max_vertices:
            continue
        g = _graph_from_masks(list(adj))
        if filter is None or filter(g):
            yield g


# ---------------------------------------------------------------------------
# Domination
# ---------------------------------------------------------------------------

def _is_k_dominating(G: Graph, U: set, k: int) -> bool:
    return all(len(G.adj[v] & U) >= k for v in G.vertices if v not in U)


def k_dominating_set(G: Graph, k: int) -> set[int]:
    """A k-dominating set, minimal by inclusion, found by greedy deletion from
    V(G); low-degree vertices are tried first so hubs tend to stay."""
    if k < 1:
        raise InvalidArgumentError("k must be positive")
    U = set(G.vertices)
    for v in sorted(G.vertices, key=lambda x: (G.degree(x), x)):
        U.discard(v)
        if not _is_k_dominating(G, U, k):
            U.add(v)
    return U


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse one edge per line (two integer labels); ``#`` starts a comment."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidArgumentError(f"line {lineno}: expected two labels, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidArgumentError(f"line {lineno}: labels must be integers: {raw!r}") from None
        if u == v:
            raise InvalidArgumentError(f"line {lineno}: loop {u}-{v}")
        edges.append((u, v))
    return Graph(edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(G: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in G.edge_list)
