"""Command-line frontend.

Exit codes: 0 success, 1 verdict failure, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from typing import Optional, TextIO

from . import __version__
from .errors import (FamilyAxiomError, InvalidArgumentError, PreconditionError,
                     ResourceLimitError)
from .graph import Graph, norm_edge, read_edge_list, vertex_connectivity
from .families import Rigidity, Truncation, Union, DeCone, make_oracle, parse_family

EXIT_OK, EXIT_VERDICT, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

GRAPH_COMMANDS = ("rank", "rigid", "circuits", "bridges", "closure", "vconn", "gconn",
                  "union-check", "reconstruct", "bridge-witness")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", action="append",
                        help="family spec (repeatable for experiment; default graphic)")
    common.add_argument("--graph", help="edge-list file")
    common.add_argument("--nmax", type=int, help="vertex cap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, help="rigidity trials override")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--expect-counterexample", action="store_true",
                        help="experiment: succeed only if a counterexample is found")

    p = _Parser(prog="graphmatroids", description="Graph matroid family toolkit")
    p.add_argument("--version", action="version", version=f"graphmatroids {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in GRAPH_COMMANDS + ("profile", "bounded-rank", "check-axioms"):
        sp = sub.add_parser(name, parents=[common])
        if name == "closure":
            sp.add_argument("--subset", required=True,
                            help="edges as 'u-v,u-v' or an edge-list file")
        if name == "reconstruct":
            sp.add_argument("--n-extra", type=int, default=2)
        if name == "check-axioms":
            sp.add_argument("--n", type=int, default=5, help="exhaustive check on K_n")
            sp.add_argument("--samples", type=int, default=1000)
    ex = sub.add_parser("experiment", parents=[common])
    ex.add_argument("suite")
    return p


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _edges_json(edges) -> list:
    return [list(e) for e in sorted(edges)]


def _apply_overrides(spec, seed: Optional[int], trials: Optional[int]):
    """Push --seed/--trials into rigidity components of a spec."""
    if isinstance(spec, Rigidity):
        changes = {}
        if trials is not None:
            changes["trials"] = trials
        if seed:
            changes["seed"] = seed
        return dataclasses.replace(spec, **changes) if changes else spec
    if isinstance(spec, Union):
        return Union(tuple(_apply_overrides(p, seed, trials) for p in spec.parts))
    if isinstance(spec, Truncation):
        return Truncation(_apply_overrides(spec.inner, seed, trials), spec.k)
    if isinstance(spec, DeCone):
        return DeCone(_apply_overrides(spec.inner, seed, trials))
    return spec


def _family(args):
    texts = args.family or ["graphic"]
    if len(texts) > 1:
        raise InvalidArgumentError("this command takes a single --family")
    return _apply_overrides(parse_family(texts[0]), args.seed, args.trials)


def _graph(args) -> Graph:
    if not args.graph:
        raise InvalidArgumentError(f"{args.command} needs --graph")
    if not os.path.isfile(args.graph):
        raise InvalidArgumentError(f"graph file not found: {args.graph}")
    return read_edge_list(args.graph)


def _parse_subset(text: str) -> list:
    if os.path.isfile(text):
        return list(read_edge_list(text).edge_list)
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            u, v = (int(x) for x in tok.split("-"))
        except ValueError:
            raise InvalidArgumentError(f"bad edge {tok!r} in --subset; use u-v") from None
        out.append(norm_edge(u, v))
    return out


# ---------------------------------------------------------------------------
# Subcommands: each returns (result dict, ok flag, caps dict)
# ---------------------------------------------------------------------------

def _cmd_rank(args, oracle, G):
    from .matroid import rank
    rep = rank(oracle, G)
    return {"rank": rep.rank, "basis": _edges_json(rep.basis)}, True, {}


def _cmd_rigid(args, oracle, G):
    from .matroid import complete_rank, is_rigid
    return ({"rigid": is_rigid(oracle, G), "rank": oracle.rank_edges(G.edges),
             "complete_rank": complete_rank(oracle, G.n)}, True, {})


def _cmd_circuits(args, oracle, G):
    from .matroid import circuits
    cs = circuits(oracle, G)
    cs = sorted((sorted(c) for c in cs), key=lambda c: (len(c), c))
    return {"count": len(cs), "circuits": [[list(e) for e in c] for c in cs]}, True, {}


def _cmd_bridges(args, oracle, G):
    from .matroid import bridges
    return {"bridges": _edges_json(bridges(oracle, G))}, True, {}


def _cmd_closure(args, oracle, G):
    from .matroid import closure
    E0 = _parse_subset(args.subset)
    return {"subset": _edges_json(E0), "closure": _edges_json(closure(oracle, G, E0))}, True, {}


def _cmd_vconn(args, oracle, G):
    from .connectivity import vertical_connectivity_report
    rep = vertical_connectivity_report(oracle, G)
    out = {"vertical_connectivity": rep.connectivity, "rank": rep.rank,
           "separation": None if rep.separation is None else rep.separation.to_json()}
    return out, True, {}


def _cmd_gconn(args, oracle, G):
    return {"vertex_connectivity": vertex_connectivity(G)}, True, {}


def _cmd_union_check(args, oracle, G):
    from .union import union_independent
    spec = oracle.spec
    if not isinstance(spec, Union):
        raise InvalidArgumentError("union-check needs a union(...) family")
    parts = [make_oracle(p, args.seed) for p in spec.parts]
    P = union_independent(parts, G)
    out = {"independent": P is not None,
           "partition": None if P is None else [_edges_json(p) for p in P.parts]}
    return out, True, {}


def _cmd_reconstruct(args, oracle, G):
    from .reconstruction import is_reconstructible
    v = is_reconstructible(oracle, G, n_extra=args.n_extra)
    return v.to_json(), True, {"n_extra": args.n_extra}


def _cmd_bridge_witness(args, oracle, G):
    from .reconstruction import bridge_witness
    w = bridge_witness(oracle, G)
    out = {"found": w is not None,
           "G1": None if w is None else _edges_json(w[0].edges),
           "G2": None if w is None else _edges_json(w[1].edges)}
    return out, True, {}


def _cmd_profile(args, oracle):
    from .structure import compute_profile
    n_max = args.nmax if args.nmax is not None else 6
    return compute_profile(oracle, n_max).to_json(), True, {"n_max": n_max}


def _cmd_bounded_rank(args, oracle):
    from .structure import BOUNDEDNESS_HORIZON, bounded_rank
    return {"bounded_rank": bounded_rank(oracle)}, True, {"horizon": BOUNDEDNESS_HORIZON}


def _cmd_check_axioms(args, oracle):
    from .matroid import verify_family_axioms, verify_matroid_axioms
    n = args.nmax if args.nmax is not None else 6
    m = verify_matroid_axioms(oracle, args.n)
    f = verify_family_axioms(oracle, args.samples, n, args.seed)
    ok = m.ok and f.ok
    out = {"matroid_axioms": m.summary(), "matroid_ok": m.ok,
           "invariance_violations": len(f.invariance_violations),
           "compatibility_violations": len(f.compatibility_violations),
           "family_ok": f.ok}
    return out, ok, {"n": args.n, "samples": args.samples, "sample_n": n}


_GRAPH_CMDS = {
    "rank": _cmd_rank, "rigid": _cmd_rigid, "circuits": _cmd_circuits,
    "bridges": _cmd_bridges, "closure": _cmd_closure, "vconn": _cmd_vconn,
    "gconn": _cmd_gconn, "union-check": _cmd_union_check,
    "reconstruct": _cmd_reconstruct, "bridge-witness": _cmd_bridge_witness,
}
_FAMILY_CMDS = {"profile": _cmd_profile, "bounded-rank": _cmd_bounded_rank,
                "check-axioms": _cmd_check_axioms}


def _dispatch(args):
    """Returns (report without timing, ok flag)."""
    if args.jobs < 1:
        raise InvalidArgumentError("--jobs must be positive")
    if args.command == "experiment":
        from .experiments import run_suite
        rep = run_suite(args.suite, families=args.family, n_max=args.nmax,
                        seed=args.seed, jobs=args.jobs)
        ok = (not rep.ok) if args.expect_counterexample else rep.ok
        body = rep.to_json()
        report = {"family": list(rep.families), "caps": rep.caps, "result": body}
        return report, ok
    spec = _family(args)
    oracle = make_oracle(spec, args.seed)
    if args.command in _GRAPH_CMDS:
        G = _graph(args)
        result, ok, caps = _GRAPH_CMDS[args.command](args, oracle, G)
    else:
        result, ok, caps = _FAMILY_CMDS[args.command](args, oracle)
    return {"family": str(spec), "caps": caps, "result": result}, ok


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def format_table(report: dict) -> str:
    lines = []
    head = [("command", report["command"]), ("family", _fmt(report["family"])),
            ("seed", report["seed"])]
    if report["caps"]:
        head.append(("caps", _fmt(report["caps"])))
    result = report["result"]
    rows = result.get("rows") if report["command"] == "experiment" else None
    if rows is not None:
        head += [("expected", result["expected"]), ("verdict", result["verdict"])]
    else:
        head += sorted(result.items())
    width = max(len(k) for k, _ in head)
    lines += [f"{k.ljust(width)}  {_fmt(v)}" for k, v in head]
    if rows is not None:
        w_inst = max([len("instance")] + [len(r["instance"]) for r in rows])
        lines.append("")
        lines.append(f"{'instance'.ljust(w_inst)}  ok     detail")
        for r in rows:
            lines.append(f"{r['instance'].ljust(w_inst)}  {str(r['ok']).ljust(5)}  {r['detail']}")
    return "\n".join(lines) + "\n"


def run_command(argv, out: TextIO = None, err: TextIO = None) -> tuple[int, Optional[dict]]:
    """Parse ``argv``, run one subcommand and print its report.  Returns the
    exit code and the report (None on error)."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE, None
    except SystemExit as exc:  # --help / --version
        return (EXIT_OK if not exc.code else EXIT_USAGE), None
    start = time.perf_counter()
    try:
        body, ok = _dispatch(args)
    except (InvalidArgumentError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE, None
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=err)
        return EXIT_RESOURCE, None
    except FamilyAxiomError as exc:
        print(f"family axiom failure: {exc}", file=err)
        return EXIT_VERDICT, None
    report = {"tool": "graphmatroids", "version": __version__, "command": args.command,
              "seed": args.seed, **body,
              "wall_time": round(time.perf_counter() - start, 6)}
    if args.json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        out.write(format_table(report))
    return (EXIT_OK if ok else EXIT_VERDICT), report


def main(argv=None) -> int:
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
