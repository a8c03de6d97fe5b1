"""Concrete graph matroid families, their declarative specs, and a small text
syntax for naming them on the command line.

Grammar (whitespace is ignored)::

    spec   := call | atom
    atom   := NAME [":" params]
    params := KEY "=" INT ("," KEY "=" INT)*
    call   := "trunc(" spec "," "k" "=" INT ")"
            | "union(" spec (";" spec)* ")"
            | "decone(" spec ")"

Atoms: ``graphic``, ``bicircular``, ``even-cycle``, ``count:k=..,l=..``,
``rigidity:d=..[,trials=..][,seed=..]``, ``uniform:k=..``, ``stars:m=..``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, Union as TypingUnion

from .errors import InvalidArgumentError, SpecSyntaxError
from .graph import (Edge, Graph, canonical_form, canonical_labeling, cone, find_subgraph,
                    star_graph, vertex_connectivity)
from .linalg import MERSENNE_31, rank_mod_p
from .matroid import Oracle
from .sparsity import check_params, is_sparse, pebble_rank

DEFAULT_RIGIDITY_TRIALS = 3


# ---------------------------------------------------------------------------
# Specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graphic:
    def __str__(self):
        return "graphic"


@dataclass(frozen=True)
class Bicircular:
    def __str__(self):
        return "bicircular"


@dataclass(frozen=True)
class EvenCycle:
    def __str__(self):
        return "even-cycle"


@dataclass(frozen=True)
class Count:
    k: int
    l: int

    def __post_init__(self):
        check_params(self.k, self.l)

    def __str__(self):
        return f"count:k={self.k},l={self.l}"


@dataclass(frozen=True)
class Rigidity:
    d: int
    trials: int = DEFAULT_RIGIDITY_TRIALS
    seed: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise InvalidArgumentError(f"rigidity dimension must be >= 1, got {self.d}")
        if self.trials < 1:
            raise InvalidArgumentError(f"rigidity trials must be >= 1, got {self.trials}")

    def __str__(self):
        extra = ""
        if self.trials != DEFAULT_RIGIDITY_TRIALS:
            extra += f",trials={self.trials}"
        if self.seed:
            extra += f",seed={self.seed}"
        return f"rigidity:d={self.d}{extra}"


@dataclass(frozen=True)
class Uniform:
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise InvalidArgumentError(f"uniform rank must be >= 0, got {self.k}")

    def __str__(self):
        return f"uniform:k={self.k}"


@dataclass(frozen=True)
class Truncation:
    inner: "FamilySpec"
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise InvalidArgumentError(f"truncation rank must be >= 0, got {self.k}")

    def __str__(self):
        return f"trunc({self.inner},k={self.k})"


@dataclass(frozen=True)
class UnionStable:
    X: tuple
    k: int
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(g.without_isolated() for g in self.X))
        if not union_stable_check(list(self.X), self.k):
            raise InvalidArgumentError("X is not union stable")

    def __str__(self):
        if self.label:
            return self.label
        return f"union-stable(k={self.k},|X|={len(self.X)})"


@dataclass(frozen=True)
class ForbiddenSparse:
    k: int
    C: tuple

    def __post_init__(self):
        if self.k < 2:
            raise InvalidArgumentError(f"forbidden-sparse needs k >= 2, got {self.k}")
        for g in self.C:
            if any(deg != 2 * self.k for deg in g.degrees().values()):
                raise InvalidArgumentError(f"{g!r} is not {2 * self.k}-regular")
            if vertex_connectivity(g) < 3:
                raise InvalidArgumentError(f"{g!r} is not 3-connected")

    def __str__(self):
        return f"forbidden-sparse(k={self.k},|C|={len(self.C)})"


@dataclass(frozen=True)
class Union:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise InvalidArgumentError("union needs at least one part")

    def __str__(self):
        return "union(" + ";".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class DeCone:
    inner: "FamilySpec"

    def __post_init__(self):
        if is_bounded_spec(self.inner):
            raise InvalidArgumentError(f"decone needs an unbounded inner family, got {self.inner}")

    def __str__(self):
        return f"decone({self.inner})"


FamilySpec = TypingUnion[Graphic, Bicircular, EvenCycle, Count, Rigidity, Uniform, Truncation,
                         UnionStable, ForbiddenSparse, Union, DeCone]


def stars(m: int) -> UnionStable:
    """The union-stable family whose only small circuit is the star K_{1,m}."""
    if m < 1:
        raise InvalidArgumentError(f"stars needs m >= 1, got {m}")
    return UnionStable((star_graph(m),), m, label=f"stars:m={m}")


def is_bounded_spec(spec) -> bool:
    """Whether the spec is known to describe a bounded family."""
    if isinstance(spec, (Uniform, Truncation, UnionStable)):
        return True
    if isinstance(spec, Union):
        return all(is_bounded_spec(p) for p in spec.parts)
    return False


def count_threshold(k: int, l: int) -> int:
    """Threshold of the (k, l)-count family for l >= 0.

    A circuit spanning t + 1 vertices has k(t + 1) - l + 1 edges; with a
    vertex of degree k + 1 the rest fit in K_t, so kt - l <= t(t - 1)/2,
    and the degree-(k+1) vertex needs t >= k + 1.
    The smallest such t is attained for every k <= 3 (checked against
    exhaustive circuit search), which is the range documented_profile uses.
    """
    check_params(k, l)
    if l < 0:
        raise InvalidArgumentError("threshold formula needs l >= 0")
    t = k + 1
    while k * t - l > t * (t - 1) // 2:
        t += 1
    return t


def documented_profile(spec) -> Optional[tuple[int, int]]:
    """Known (dimensionality, threshold) of a shipped unbounded family, or
    None when no profile is documented."""
    if isinstance(spec, Graphic):
        return (1, 2)
    if isinstance(spec, (Bicircular, EvenCycle)):
        return (1, 3)
    if isinstance(spec, Count):
        if spec.k <= 3 and spec.l >= 0:
            return (spec.k, count_threshold(spec.k, spec.l))
        return None
    if isinstance(spec, Rigidity):
        return (spec.d, spec.d + 1)
    if isinstance(spec, Union) and all(isinstance(p, Graphic) for p in spec.parts):
        j = len(spec.parts)
        return (j, 2 * j)
    return None


# ---------------------------------------------------------------------------
# Independence predicates
# ---------------------------------------------------------------------------

def _component_stats(edges) -> list[tuple[int, int, set]]:
    """(vertex count, edge count, vertex set) per component of an edge set."""
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    es = list(edges)
    for u, v in es:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comps: dict = {}
    for v in parent:
        comps.setdefault(find(v), [0, 0, set()])
        comps[find(v)][0] += 1
        comps[find(v)][2].add(v)
    for u, _ in es:
        comps[find(u)][1] += 1
    return [tuple(c) for c in comps.values()]


def _forest_rank(edges) -> int:
    return sum(nv - 1 for nv, _, _ in _component_stats(edges))


def graphic_independent(G: Graph) -> bool:
    return G.is_forest()


def bicircular_independent(G: Graph) -> bool:
    return all(ne <= nv for nv, ne, _ in _component_stats(G.edges))


def _bicircular_rank(edges) -> int:
    return sum(nv if ne >= nv else nv - 1 for nv, ne, _ in _component_stats(edges))


def _is_bipartite(edges) -> bool:
    adj: dict = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    side: dict = {}
    for s in adj:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def even_cycle_independent(G: Graph) -> bool:
    for nv, ne, vs in _component_stats(G.edges):
        if ne > nv:
            return False
        # a unicyclic component is independent iff its cycle is odd
        if ne == nv and _is_bipartite(e for e in G.edges if e[0] in vs):
            return False
    return True


def _even_cycle_rank(edges) -> int:
    es = list(edges)
    total = 0
    for nv, _, vs in _component_stats(es):
        total += nv - 1 if _is_bipartite(e for e in es if e[0] in vs) else nv
    return total


def count_independent(G: Graph, k: int, l: int) -> bool:
    return is_sparse(G.edges, k, l)


def _rigidity_matrix_rank(G: Graph, d: int, trials: int, seed: int) -> int:
    return _rigidity_rank_cached(G.without_isolated(), d, trials, seed)


@lru_cache(maxsize=1 << 16)
def _rigidity_rank_cached(G: Graph, d: int, trials: int, seed: int) -> int:
    if G.m == 0:
        return 0
    label = canonical_labeling(G)
    form = canonical_form(G)
    edges = sorted(tuple(sorted((label[u], label[v]))) for u, v in G.edges)
    n = G.n
    best = 0
    for trial in range(trials):
        rng = random.Random(f"{seed}:{form}:{trial}")
        pts = [[rng.randrange(MERSENNE_31) for _ in range(d)] for _ in range(n)]
        rows = []
        for u, v in edges:
            row = [0] * (d * n)
            for c in range(d):
                diff = pts[u][c] - pts[v][c]
                row[d * u + c] = diff
                row[d * v + c] = -diff
            rows.append(row)
        best = max(best, rank_mod_p(rows))
        if best == len(edges):
            break
    return best


def rigidity_independent(G: Graph, d: int, trials: int = DEFAULT_RIGIDITY_TRIALS,
                         seed: int = 0) -> bool:
    """Generic d-dimensional rigidity independence by randomized exact rank.

    Coordinates are drawn from GF(2^31 - 1) with a generator seeded by the
    seed and the canonical form of G, so the verdict depends only on the
    isomorphism class.  Full row rank in any trial certifies independence; a
    dependent verdict is wrong only if every trial hit a bad embedding.
    """
    if d < 1:
        raise InvalidArgumentError(f"rigidity dimension must be >= 1, got {d}")
    return _rigidity_matrix_rank(G, d, trials, seed) == G.m


def uniform_independent(G: Graph, k: int) -> bool:
    return G.m <= k


def truncation_independent(G: Graph, inner: Oracle, k: int) -> bool:
    return G.m <= k and inner.is_independent(G)


def _form_set(X) -> frozenset:
    return frozenset(canonical_form(g.without_isolated()) for g in X)


def _placements(G: Graph, H: Graph):
    """Images of E(H) under injective vertex maps into V(G) plus fresh labels,
    restricted to maps that identify at least one vertex pair."""
    gv = list(G.vertices)
    hv = list(H.vertices)
    fresh = max(gv, default=-1) + 1
    seen = set()
    for j in range(2, len(hv) + 1):
        for dom in itertools.combinations(hv, j):
            for img in itertools.permutations(gv, j):
                f = dict(zip(dom, img))
                nxt = fresh
                for v in hv:
                    if v not in f:
                        f[v] = nxt
                        nxt += 1
                image = frozenset(tuple(sorted((f[u], f[v]))) for u, v in H.edges)
                if image not in seen:
                    seen.add(image)
                    yield image


def union_stable_violation(X: Sequence[Graph], k: int) -> Optional[tuple]:
    """A witness (G-edges, H-edges, e) breaking union stability, or None.

    For distinct copies G, H of members of X sharing an edge e, either
    (G u H) - e has at least k + 1 edges or it is (isomorphic to) a member
    of X.
    """
    members = [g.without_isolated() for g in X]
    for g in members:
        if g.m != k:
            raise InvalidArgumentError(f"member {g!r} has {g.m} edges, expected {k}")
    forms = _form_set(members)
    for G in members:
        for H in members:
            for image in _placements(G, H):
                shared = G.edges & image
                if not shared or image == G.edges:
                    continue
                U = G.edges | image
                for e in sorted(shared):
                    W = U - {e}
                    if len(W) >= k + 1:
                        continue
                    if canonical_form(Graph(W)) not in forms:
                        return (G.edges, image, e)
    return None


def union_stable_check(X: Sequence[Graph], k: int) -> bool:
    return union_stable_violation(X, k) is None


def union_stable_independent(G: Graph, X: Sequence[Graph], k: int) -> bool:
    if not union_stable_check(X, k):
        raise InvalidArgumentError("X is not union stable")
    return _union_stable_verdict(G, _form_set(X), k)


def _union_stable_verdict(G: Graph, forms: frozenset, k: int) -> bool:
    if G.m > k:
        return False
    return canonical_form(G.without_isolated()) not in forms


def forbidden_sparse_independent(G: Graph, k: int, C: Sequence[Graph]) -> bool:
    if not is_sparse(G.edges, k, 0):
        return False
    H = G.without_isolated()
    return all(find_subgraph(c, H) is None for c in C)


def decone_independent(G: Graph, inner: Oracle) -> bool:
    return inner.is_independent(cone(G.without_isolated()))


# ---------------------------------------------------------------------------
# Oracle construction
# ---------------------------------------------------------------------------

def make_oracle(spec, seed: int = 0) -> Oracle:
    """Build the independence oracle for a spec.  ``seed`` is recorded on the
    oracle; the rigidity family takes its randomness from its own spec."""
    if isinstance(spec, Graphic):
        return Oracle(spec, graphic_independent, seed, rank_fn=_forest_rank)
    if isinstance(spec, Bicircular):
        return Oracle(spec, bicircular_independent, seed, rank_fn=_bicircular_rank)
    if isinstance(spec, EvenCycle):
        return Oracle(spec, even_cycle_independent, seed, rank_fn=_even_cycle_rank)
    if isinstance(spec, Count):
        k, l = spec.k, spec.l
        fast = (lambda es: pebble_rank(es, k, l)) if l >= 0 else None
        return Oracle(spec, lambda G: count_independent(G, k, l), seed, rank_fn=fast)
    if isinstance(spec, Rigidity):
        d, trials, s = spec.d, spec.trials, spec.seed
        return Oracle(spec, lambda G: rigidity_independent(G, d, trials, s), seed,
                      rank_fn=lambda es: _rigidity_matrix_rank(Graph(es), d, trials, s))
    if isinstance(spec, Uniform):
        k = spec.k
        return Oracle(spec, lambda G: uniform_independent(G, k), seed,
                      rank_fn=lambda es: min(len(es), k))
    if isinstance(spec, Truncation):
        inner = make_oracle(spec.inner, seed)
        k = spec.k
        return Oracle(spec, lambda G: truncation_independent(G, inner, k), seed,
                      rank_fn=lambda es: min(inner.rank_edges(es), k))
    if isinstance(spec, UnionStable):
        forms = _form_set(spec.X)
        k = spec.k
        return Oracle(spec, lambda G: _union_stable_verdict(G, forms, k), seed)
    if isinstance(spec, ForbiddenSparse):
        k, C = spec.k, spec.C
        return Oracle(spec, lambda G: forbidden_sparse_independent(G, k, C), seed)
    if isinstance(spec, Union):
        from .union import union_independent, union_rank
        parts = [make_oracle(p, seed) for p in spec.parts]
        return Oracle(spec, lambda G: union_independent(parts, G) is not None, seed,
                      rank_fn=lambda es: union_rank(parts, Graph(es)))
    if isinstance(spec, DeCone):
        inner = make_oracle(spec.inner, seed)
        return Oracle(spec, lambda G: decone_independent(G, inner), seed)
    raise InvalidArgumentError(f"unknown family spec {spec!r}")


# ---------------------------------------------------------------------------
# Text syntax
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_-]*)|(-?\d+)|(.))")

_ATOM_PARAMS = {
    "graphic": ((), ()),
    "bicircular": ((), ()),
    "even-cycle": ((), ()),
    "count": (("k", "l"), ()),
    "rigidity": (("d",), ("trials", "seed")),
    "uniform": (("k",), ()),
    "stars": (("m",), ()),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        end = len(text.rstrip())
        while pos < end:
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(1):
                self.toks.append(("name", m.group(1), m.start(1)))
            elif m.group(2):
                self.toks.append(("int", m.group(2), m.start(2)))
            elif m.group(3):
                self.toks.append(("sym", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def error(self, msg: str, pos: Optional[int] = None):
        if pos is None:
            pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        raise SpecSyntaxError(msg, self.text, pos)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind: str, value: Optional[str] = None):
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = repr(tok[1]) if tok else "end of input"
            self.error(f"expected {want}, got {got}")
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take("int")[1])

    def params(self, allowed) -> dict[str, tuple[int, int]]:
        """key=value pairs; a comma followed by a key this atom does not take
        (or already has) ends the list, so ``trunc(uniform:k=3,k=5)`` parses."""
        out: dict[str, tuple[int, int]] = {}
        while True:
            key = self.take("name")
            if key[1] not in allowed:
                self.error(f"unknown parameter {key[1]!r}", key[2])
            self.take("sym", "=")
            out[key[1]] = (self.integer(), key[2])
            nxt = self.toks[self.i:self.i + 3]
            if len(nxt) < 3 or nxt[0][1] != "," or nxt[2][1] != "=":
                return out
            name, at = nxt[1][1], nxt[1][2]
            if name not in allowed or name in out:
                if name == "k":
                    # the truncation rank of an enclosing trunc(...)
                    return out
                if name in out:
                    self.error(f"duplicate parameter {name!r}", at)
                self.error(f"unknown parameter {name!r}", at)
            self.take("sym", ",")

    def spec(self):
        name = self.take("name")
        word, pos = name[1], name[2]
        tok = self.peek()
        if word in ("trunc", "union", "decone"):
            self.take("sym", "(")
            if word == "decone":
                inner = self.spec()
                self.take("sym", ")")
                return self.build(lambda: DeCone(inner), pos)
            if word == "trunc":
                inner = self.spec()
                self.take("sym", ",")
                key = self.take("name", "k")
                self.take("sym", "=")
                k = self.integer()
                self.take("sym", ")")
                return self.build(lambda: Truncation(inner, k), key[2])
            parts = [self.spec()]
            while self.peek() is not None and self.peek()[1] == ";":
                self.take("sym", ";")
                parts.append(self.spec())
            self.take("sym", ")")
            return self.build(lambda: Union(tuple(parts)), pos)
        if word not in _ATOM_PARAMS:
            self.error(f"unknown family {word!r}", pos)
        required, optional = _ATOM_PARAMS[word]
        params: dict[str, tuple[int, int]] = {}
        if tok is not None and tok[1] == ":":
            self.take("sym", ":")
            params = self.params(required + optional)
        for key in required:
            if key not in params:
                self.error(f"{word} needs parameter {key!r}", pos)
        p = {key: v for key, (v, _) in params.items()}
        ctor = {
            "graphic": Graphic,
            "bicircular": Bicircular,
            "even-cycle": EvenCycle,
            "count": lambda: Count(p["k"], p["l"]),
            "rigidity": lambda: Rigidity(p["d"], p.get("trials", DEFAULT_RIGIDITY_TRIALS),
                                         p.get("seed", 0)),
            "uniform": lambda: Uniform(p["k"]),
            "stars": lambda: stars(p["m"]),
        }[word]
        return self.build(ctor, pos)

    def build(self, ctor, pos: int):
        try:
            return ctor()
        except SpecSyntaxError:
            raise
        except InvalidArgumentError as exc:
            self.error(str(exc), pos)


def parse_family(text: str):
    """Parse the family text syntax; errors carry the offending position."""
    p = _Parser(text)
    if not p.toks:
        p.error("empty family spec", 0)
    spec = p.spec()
    if p.peek() is not None:
        p.error(f"unexpected trailing input {p.peek()[1]!r}")
    return spec


def format_family(spec) -> str:
    return str(spec)
