"""Named experiment suites: each one checks a structural fact about graph
matroid families on every instance within its caps and reports one row per
instance."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .errors import InvalidArgumentError
from .graph import (Graph, complete_graph, cycle_graph, disjoint_union, enumerate_graphs,
                    enumerate_graphs_by_edges, is_isomorphic)
from .families import count_threshold, documented_profile, make_oracle, parse_family
from .matroid import bridges, complete_rank, is_rigid


@dataclass(frozen=True)
class ExperimentSuite:
    name: str
    families: tuple
    caps: dict
    expected: str  # "pass" or "counterexample"
    description: str = ""


@dataclass
class SuiteReport:
    name: str
    families: tuple
    seed: int
    caps: dict
    expected: str
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.rows)

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "counterexample"

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "families": list(self.families),
            "seed": self.seed,
            "caps": dict(self.caps),
            "expected": self.expected,
            "verdict": self.verdict,
            "rows": list(self.rows),
        }


def _row(instance: str, ok: bool, detail: str = "") -> dict:
    return {"instance": instance, "ok": bool(ok), "detail": detail}


@lru_cache(maxsize=None)
def _oracle(text: str):
    return make_oracle(parse_family(text))


def _profile_of(text: str, n_max: int):
    prof = documented_profile(parse_family(text))
    if prof is not None:
        return prof
    from .structure import compute_profile
    p = compute_profile(_oracle(text), min(n_max, 7))
    return p.pair() if p.exact else None


# ---------------------------------------------------------------------------
# Per-instance checks.  Each takes (family text, caps, seed) and returns rows;
# they are module-level so a process pool can run them.
# ---------------------------------------------------------------------------

def check_rank_linearity(text: str, caps: dict, seed: int) -> list:
    n_max = caps["n_max"]
    prof = _profile_of(text, n_max)
    if prof is None:
        return [_row(text, False, "no exact profile")]
    d, t = prof
    o = _oracle(text)
    base = complete_rank(o, t)
    bad = [n for n in range(t, n_max + 1) if complete_rank(o, n) != d * (n - t) + base]
    return [_row(text, not bad, f"d={d} t={t} n<={n_max}" + (f" fails at n={bad}" if bad else ""))]


def check_gluing(text: str, caps: dict, seed: int) -> list:
    n_max = caps["n_max"]
    prof = _profile_of(text, n_max)
    if prof is None:
        return [_row(text, False, "no exact profile")]
    _, t = prof
    o = _oracle(text)
    rng = random.Random(seed)
    rigid = [g for g in enumerate_graphs(min(n_max, caps["part_vertices"]))
             if g.n >= t and is_rigid(o, g)]
    checked = 0
    for G1, G2 in itertools.product(rigid, repeat=2):
        for s in range(t, min(G1.n, G2.n) + 1):
            if G1.n + G2.n - s > n_max:
                continue
            for _ in range(caps.get("identifications", 2)):
                shared = rng.sample(G2.vertices, s)
                targets = rng.sample(G1.vertices, s)
                mp = dict(zip(shared, targets))
                fresh = G1.n
                for v in G2.vertices:
                    if v not in mp:
                        mp[v] = fresh
                        fresh += 1
                U = G1.union(G2.relabel(mp))
                checked += 1
                if not is_rigid(o, U):
                    return [_row(text, False, f"{G1!r} + {G2!r} glued on {s} vertices")]
    return [_row(text, True, f"{checked} glued pairs, t={t}")]


def check_vertex_addition(text: str, caps: dict, seed: int) -> list:
    n_max = caps["n_max"]
    prof = _profile_of(text, n_max)
    if prof is None:
        return [_row(text, False, "no exact profile")]
    d, _ = prof
    o = _oracle(text)
    checked = 0
    for g in enumerate_graphs(n_max):
        low = [v for v in g.vertices if g.degree(v) <= d]
        if not low:
            continue
        br = bridges(o, g)
        for v in low:
            checked += 1
            if not g.star(v) <= br:
                return [_row(text, False, f"vertex {v} of {g!r}")]
    return [_row(text, True, f"{checked} low-degree vertices, d={d}")]


def check_count_threshold(text: str, caps: dict, seed: int) -> list:
    from .structure import compute_profile
    spec = parse_family(text)
    p = compute_profile(_oracle(text), caps["n_max"])
    want = count_threshold(spec.k, spec.l)
    got = p.threshold
    return [_row(text, got == want and p.dimensionality == spec.k,
                 f"d={p.dimensionality} t={got} expected t={want}")]


def check_union_threshold(text: str, caps: dict, seed: int) -> list:
    from .structure import compute_profile
    from .union import construct_rigid_partition, union_threshold_bound
    spec = parse_family(text)
    parts = [documented_profile(p) for p in spec.parts]
    bound = union_threshold_bound(parts)
    p = compute_profile(_oracle(text), caps["n_max"])
    dsum = sum(d for d, _ in parts)
    graphs = construct_rigid_partition(list(spec.parts), bound)
    disjoint = sum(g.m for g in graphs) == len(set().union(*(g.edges for g in graphs)))
    ok = p.dimensionality == dsum and p.threshold == bound and disjoint
    return [_row(text, ok, f"d={p.dimensionality} (sum {dsum}) t={p.threshold} bound={bound}")]


def check_graphic_vconn(text: str, caps: dict, seed: int) -> list:
    from .connectivity import graphic_vertical_connectivity_harness
    rep = graphic_vertical_connectivity_harness(caps["n_max"])
    detail = f"{rep.checked} connected graphs"
    if rep.counterexamples:
        detail = f"mismatch on {rep.counterexamples[0][0]!r}"
    return [_row("graphic", rep.ok, detail)]


def check_prop35(text: str, caps: dict, seed: int) -> list:
    from .connectivity import prop35_harness
    prof = _profile_of(text, caps["n_max"])
    if prof is None:
        return [_row(text, False, "no exact profile")]
    rep = prop35_harness(_oracle(text), prof[0], prof[1], caps["n_max"], caps["edge_cap"])
    detail = f"{rep.checked} hosts, {rep.skipped} over edge cap"
    if rep.counterexamples:
        detail = f"counterexample {rep.counterexamples[0][0]!r}"
    return [_row(text, rep.ok, detail)]


def check_prop36(text: str, caps: dict, seed: int) -> list:
    from .connectivity import prop36_harness
    prof = _profile_of(text, caps["n_max"])
    if prof is None:
        return [_row(text, False, "no exact profile")]
    rep = prop36_harness(_oracle(text), prof[1], (1, 2), caps["n_max"], caps["edge_cap"])
    detail = f"{rep.checked} hosts, {rep.skipped} over edge cap"
    if rep.counterexamples:
        detail = f"counterexample {rep.counterexamples[0][0]!r} k={rep.counterexamples[0][1]}"
    return [_row(text, rep.ok, detail)]


def check_bridge_witness(text: str, caps: dict, seed: int) -> list:
    from .reconstruction import bridge_witness, is_reconstructible
    o = _oracle(text)
    checked = 0
    for m in range(2, caps["edge_cap"] + 1):
        for g in enumerate_graphs_by_edges(m):
            if not bridges(o, g):
                continue
            checked += 1
            if is_reconstructible(o, g).reconstructible:
                return [_row(text, False, f"{g!r} judged reconstructible")]
            if bridge_witness(o, g) is None:
                return [_row(text, False, f"no bridge witness for {g!r}")]
    return [_row(text, True, f"{checked} graphs with a bridge, <= {caps['edge_cap']} edges")]


def check_bounded_whitney(text: str, caps: dict, seed: int) -> list:
    from .reconstruction import matroid_isomorphisms, star_preserving
    from .structure import bounded_rank, small_circuit_min_degree_one
    o = _oracle(text)
    rows = []
    r = bounded_rank(o)
    rows.append(_row(f"{text} bounded rank", True, f"r(M)={r}"))
    small = small_circuit_min_degree_one(o, r)
    if small is None:
        rows.append(_row(f"{text} small circuit", False, "no min-degree-one small circuit"))
        return rows
    m, w = small
    rows.append(_row(f"{text} small circuit", True, f"m={m} witness {w!r}"))
    checked = 0
    for g in enumerate_graphs(caps["n_max"], filter=lambda h: h.min_degree() >= 2 * m):
        for psi in matroid_isomorphisms(o, g, g, limit=caps["isomorphisms"], cap=g.m):
            checked += 1
            if not star_preserving(g, g, psi):
                rows.append(_row(f"{text} stars", False, f"non-star-preserving on {g!r}"))
                return rows
    rows.append(_row(f"{text} stars", True, f"{checked} self-isomorphisms star-preserving"))
    return rows


def check_one_extendability(text: str, caps: dict, seed: int) -> list:
    from .structure import probe_one_extendability
    prof = _profile_of(text, caps["n_max"])
    if prof is None:
        return [_row(text, False, "no exact profile")]
    v = probe_one_extendability(_oracle(text), prof[0], caps["n_max"], caps["samples"], seed)
    return [_row(text, v.ok, str(v))]


def check_whitney_twist(text: str, caps: dict, seed: int) -> list:
    from .reconstruction import is_reconstructible
    o = _oracle(text)
    tt = disjoint_union(cycle_graph(3), cycle_graph(3))
    bowtie = Graph([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    v1 = is_reconstructible(o, tt, caps["n_extra"])
    ok1 = (not v1.reconstructible) and is_isomorphic(v1.witness[0], bowtie)
    v2 = is_reconstructible(o, complete_graph(4), caps["n_extra"])
    return [
        _row(f"{text} two triangles", ok1,
             "witness " + (repr(v1.witness[0]) if v1.witness else "none")),
        _row(f"{text} K_4", v2.reconstructible,
             f"{v2.hosts_checked} hosts, {v2.isomorphisms_checked} isomorphisms"),
    ]


def check_even_cycle_split(text: str, caps: dict, seed: int) -> list:
    from .structure import probe_one_extendability
    v = probe_one_extendability(_oracle(text), 1, caps["n_max"], 0, seed)
    return [_row(text, v.ok, str(v))]


_PROFILE_FAMILIES = ("graphic", "bicircular", "even-cycle", "count:k=2,l=3", "count:k=2,l=2",
                     "count:k=2,l=1", "count:k=2,l=0", "rigidity:d=1", "rigidity:d=2",
                     "rigidity:d=3")

SUITES: dict[str, tuple[ExperimentSuite, Callable]] = {
    s.name: (s, fn) for s, fn in [
        (ExperimentSuite("rank-linearity", _PROFILE_FAMILIES, {"n_max": 8}, "pass",
                         "r(K_n) = d(n - t) + r(K_t) for t <= n <= n_max"),
         check_rank_linearity),
        (ExperimentSuite("gluing", ("graphic", "bicircular", "count:k=2,l=3"),
                         {"n_max": 7, "part_vertices": 5, "identifications": 2}, "pass",
                         "rigid graphs sharing >= t vertices glue to a rigid graph"),
         check_gluing),
        (ExperimentSuite("vertex-addition-bridges", _PROFILE_FAMILIES[:7], {"n_max": 6}, "pass",
                         "edges at a vertex of degree <= d are bridges"),
         check_vertex_addition),
        (ExperimentSuite("count-thresholds", ("count:k=2,l=3", "count:k=2,l=2", "count:k=2,l=1",
                                              "count:k=2,l=0"), {"n_max": 8}, "pass",
                         "computed count thresholds against the threshold formula"),
         check_count_threshold),
        (ExperimentSuite("union-threshold", ("union(graphic;graphic)",), {"n_max": 8}, "pass",
                         "union profile: additive dimensionality, threshold equal to the bound"),
         check_union_threshold),
        (ExperimentSuite("graphic-vertical-conn", ("graphic",), {"n_max": 6}, "pass",
                         "vertical connectivity of graphic matroids equals vertex connectivity"),
         check_graphic_vconn),
        (ExperimentSuite("prop35-harness", ("graphic", "bicircular", "even-cycle",
                                            "count:k=2,l=3", "rigidity:d=2"),
                         {"n_max": 6, "edge_cap": 15}, "pass",
                         "vertical (r(K_t)+2)-connectivity forces (t+1)-connectivity"),
         check_prop35),
        (ExperimentSuite("prop36-harness", ("graphic", "count:k=2,l=3"),
                         {"n_max": 6, "edge_cap": 15}, "pass",
                         "k-connected k-redundantly rigid graphs are vertically (k+1)-connected"),
         check_prop36),
        (ExperimentSuite("bridge-witness", ("graphic", "bicircular"), {"edge_cap": 7}, "pass",
                         "a matroid bridge rules out reconstructibility"),
         check_bridge_witness),
        (ExperimentSuite("bounded-whitney", ("stars:m=3",), {"n_max": 8, "isomorphisms": 50},
                         "pass", "bounded rank, small star circuit, star-preserving isomorphisms"),
         check_bounded_whitney),
        (ExperimentSuite("one-extendability", ("graphic", "bicircular", "count:k=2,l=3",
                                               "rigidity:d=2"),
                         {"n_max": 6, "samples": 20}, "pass",
                         "d-dimensional edge splits preserve independence"),
         check_one_extendability),
        (ExperimentSuite("whitney-twist", ("graphic",), {"n_extra": 2}, "pass",
                         "two triangles vs. bowtie; K_4 reconstructible"),
         check_whitney_twist),
        (ExperimentSuite("even-cycle-not-1extendable", ("even-cycle",), {"n_max": 4},
                         "counterexample", "subdividing a triangle gives an even cycle"),
         check_even_cycle_split),
    ]
}


def _run_one(args):
    name, text, caps, seed = args
    return SUITES[name][1](text, caps, seed)


def run_suite(name: str, families: Optional[list] = None, n_max: Optional[int] = None,
              seed: int = 0, jobs: int = 1) -> SuiteReport:
    """Run a registered suite; ``families`` and ``n_max`` override defaults."""
    if name not in SUITES:
        raise InvalidArgumentError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite, _ = SUITES[name]
    fams = tuple(families) if families else suite.families
    for f in fams:
        parse_family(f)
    caps = dict(suite.caps)
    if n_max is not None:
        if "n_max" not in caps:
            raise InvalidArgumentError(f"suite {name} has no n_max cap")
        caps["n_max"] = n_max
    report = SuiteReport(name, fams, seed, caps, suite.expected)
    tasks = [(name, f, caps, seed) for f in fams]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    for rows in results:
        report.rows.extend(rows)
    return report
