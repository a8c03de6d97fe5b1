"""(k, l)-sparsity: the pebble game and a direct subset check."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidArgumentError, ResourceLimitError
from .graph import Edge

EXHAUSTIVE_VERTEX_CAP = 12


@dataclass
class PebbleState:
    """Pebbles per vertex plus the edges accepted so far, each oriented away
    from the vertex whose pebble covers it.

    For every vertex, free pebbles plus out-degree equals ``k``.
    """

    k: int
    l: int
    pebbles: dict = field(default_factory=dict)
    out: dict = field(default_factory=dict)

    def _touch(self, v):
        if v not in self.pebbles:
            self.pebbles[v] = self.k
            self.out[v] = set()

    def _gather(self, root, other) -> bool:
        """Move one free pebble to ``root`` along a reversed directed path,
        never taking pebbles from ``other``."""
        parent = {root: None, other: None}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if self.pebbles[y] > 0:
                    self.pebbles[y] -= 1
                    self.pebbles[root] += 1
                    while parent[y] is not None:
                        px = parent[y]
                        self.out[px].discard(y)
                        self.out[y].add(px)
                        y = px
                    return True
                stack.append(y)
        return False

    def try_insert(self, u, v) -> bool:
        """Accept edge uv iff l + 1 pebbles can be collected on u and v."""
        self._touch(u)
        self._touch(v)
        need = self.l + 1
        peb = self.pebbles
        while peb[u] + peb[v] < need:
            if peb[u] < self.k and self._gather(u, v):
                continue
            if peb[v] < self.k and self._gather(v, u):
                continue
            return False
        if peb[u] > 0:
            peb[u] -= 1
            self.out[u].add(v)
        else:
            peb[v] -= 1
            self.out[v].add(u)
        return True

    def total(self) -> int:
        return sum(self.pebbles.values()) + sum(len(s) for s in self.out.values())


def check_params(k: int, l: int) -> None:
    if k < 1 or l > 2 * k - 1:
        raise InvalidArgumentError(f"count parameters need k >= 1 and l <= 2k-1, got k={k}, l={l}")


def pebble_rank(edges: Iterable[Edge], k: int, l: int) -> int:
    """Size of the maximal (k,l)-sparse subset the pebble game accepts when
    edges are offered in sorted order (valid for 0 <= l <= 2k-1)."""
    state = PebbleState(k, l)
    return sum(1 for u, v in sorted(edges) if state.try_insert(u, v))


def is_sparse_pebble(edges: Iterable[Edge], k: int, l: int) -> bool:
    state = PebbleState(k, l)
    return all(state.try_insert(u, v) for u, v in sorted(edges))


def is_sparse_exhaustive(edges: Iterable[Edge], k: int, l: int,
                         cap: int = EXHAUSTIVE_VERTEX_CAP) -> bool:
    """Check i(X) <= k|X| - l for every vertex set X with |X| >= 2."""
    es = list(edges)
    verts = sorted({x for e in es for x in e})
    if len(verts) > cap:
        raise ResourceLimitError(f"exhaustive sparsity check capped at {cap} vertices")
    idx = {v: i for i, v in enumerate(verts)}
    masks = [(1 << idx[u]) | (1 << idx[v]) for u, v in es]
    n = len(verts)
    for size in range(2, n + 1):
        bound = k * size - l
        if len(es) <= bound:
            continue
        for combo in itertools.combinations(range(n), size):
            X = 0
            for i in combo:
                X |= 1 << i
            if sum(1 for m in masks if m & X == m) > bound:
                return False
    return True


def is_sparse(edges: Iterable[Edge], k: int, l: int) -> bool:
    check_params(k, l)
    if l >= 0:
        return is_sparse_pebble(edges, k, l)
    return is_sparse_exhaustive(edges, k, l)
