"""Command line interface: ``tempres solve | verify | generate | reduce``.

Exit status: 0 success, 1 verification failure, 2 input error, 3 guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import generators, periodic, reductions
from .exact import GuardExceeded, PoolExhausted, min_resolving_bruteforce, min_resolving_periodic_tree
from .graph import INF, TemporalGraph, classify_shape, leaves
from .io import ParseError, parse_instance, serialize_instance
from .paths import PathView, solve_path
from .stars import solve_star, solve_subdivided_star_12
from .verify import check_resolving

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
BRUTE_N_GUARD = 18
BRUTE_POOL_GUARD = 20

ALGORITHMS = ("auto", "bruteforce", "path", "star", "substar12", "substar-periodic",
              "cycle-periodic", "periodic-tree")


class InputError(ValueError):
    pass


def _fmt(d) -> str:
    return "inf" if d == INF else str(int(d))


def _json_dist(d):
    return None if d == INF else int(d)


# --- dispatch --------------------------------------------------------------------

def _one_label(g: TemporalGraph) -> bool:
    return all(len(lab) == 1 for lab in g.labels.values())


def choose_algorithm(g: TemporalGraph) -> str:
    """Most specific solver whose preconditions hold, else ``bruteforce``."""
    tag = classify_shape(g).tag
    if g.is_periodic:
        if not _one_label(g):
            return "bruteforce"
        if tag == "path":
            return "path"
        if tag == "cycle":
            return "cycle-periodic"
        if tag in ("star", "subdivided-star"):
            return "substar-periodic"
        if tag == "tree":
            return "periodic-tree"
        return "bruteforce"
    if not _one_label(g):
        return "bruteforce"
    if tag == "path":
        return "path"
    if tag == "star":
        return "star"
    if tag == "subdivided-star" and g.label_values() <= {1, 2}:
        return "substar12"
    return "bruteforce"


def _bruteforce(g: TemporalGraph, pool: str, guarded: bool, jobs: int) -> list[int]:
    if pool == "leaves":
        candidates = leaves(g)
        if guarded and len(candidates) > BRUTE_POOL_GUARD:
            raise GuardExceeded(f"pool of {len(candidates)} leaves exceeds {BRUTE_POOL_GUARD}")
        try:
            return list(min_resolving_bruteforce(g, candidates, jobs=jobs)[1])
        except PoolExhausted:
            print("leaf pool holds no resolving set; retrying with all vertices", file=sys.stderr)
    if guarded and g.n > BRUTE_N_GUARD:
        raise GuardExceeded(f"n={g.n} exceeds the exhaustive-search guard {BRUTE_N_GUARD}; "
                            "use --unsafe-no-guard to run anyway")
    return list(min_resolving_bruteforce(g, jobs=jobs)[1])


def run_algorithm(g: TemporalGraph, name: str, *, pool: str = "all", reverse: bool = False,
                  guarded: bool = True, jobs: int = 1) -> list[int]:
    if name == "auto":
        name = choose_algorithm(g)
    try:
        if name == "bruteforce":
            return _bruteforce(g, pool, guarded, jobs)
        if name == "path":
            if g.is_periodic:
                return periodic.solve_path_periodic(g)
            return solve_path(PathView.from_graph(g), reverse=reverse)
        if name == "star":
            return solve_star(g)
        if name == "substar12":
            return solve_subdivided_star_12(g)
        if name == "substar-periodic":
            return periodic.solve_substar_periodic(g)
        if name == "cycle-periodic":
            return periodic.solve_cycle_periodic(g)
        if name == "periodic-tree":
            n_leaves = len(leaves(g))
            if guarded and n_leaves > BRUTE_POOL_GUARD:
                raise GuardExceeded(f"pool of {n_leaves} leaves exceeds {BRUTE_POOL_GUARD}")
            return list(min_resolving_periodic_tree(g, jobs=jobs)[1])
    except GuardExceeded:
        raise
    except ValueError as e:
        raise InputError(f"algorithm '{name}' does not apply: {e}") from None
    raise InputError(f"unknown algorithm '{name}'")


# --- commands --------------------------------------------------------------------

def _load_graph(path: str) -> TemporalGraph:
    try:
        with open(path, encoding="utf-8") as f:
            obj = parse_instance(f.read())
    except OSError as e:
        raise InputError(str(e)) from None
    except ParseError as e:
        raise InputError(f"{path}: {e}") from None
    if not isinstance(obj, TemporalGraph):
        raise InputError(f"{path}: expected a temporal-graph instance")
    return obj


def _report(g: TemporalGraph, R, as_json: bool, extra: Optional[dict] = None) -> int:
    cert = check_resolving(g, R)
    if as_json:
        out = dict(extra or {})
        out.update({
            "verdict": cert.verdict,
            "size": len(cert.landmarks),
            "set": list(cert.landmarks),
            "witness": cert.witness if not isinstance(cert.witness, tuple) else list(cert.witness),
            "vectors": {str(v): [_json_dist(d) for d in vec] for v, vec in cert.vectors.items()},
        })
        print(json.dumps(out, sort_keys=True))
    else:
        for k, v in (extra or {}).items():
            print(f"{k}: {v}")
        print(f"verdict: {cert.verdict}")
        print(f"size: {len(cert.landmarks)}")
        print("set: " + " ".join(map(str, cert.landmarks)))
        if cert.witness is not None:
            w = cert.witness
            print("witness: " + (" ".join(map(str, w)) if isinstance(w, tuple) else str(w)))
        for v in sorted(cert.vectors):
            print(f"{v}: " + " ".join(_fmt(d) for d in cert.vectors[v]))
    return EXIT_OK if cert.is_resolving else EXIT_FAIL


def cmd_solve(args) -> int:
    g = _load_graph(args.input)
    name = choose_algorithm(g) if args.algorithm == "auto" else args.algorithm
    R = run_algorithm(g, name, pool=args.pool, reverse=args.reverse,
                      guarded=not args.unsafe_no_guard, jobs=args.jobs)
    return _report(g, R, args.json, {"algorithm": name})


def _parse_set(text: str, n: int) -> list[int]:
    try:
        R = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise InputError(f"--set must be comma-separated vertex indices, got {text!r}") from None
    if not R:
        raise InputError("--set is empty")
    bad = [r for r in R if not 0 <= r < n]
    if bad:
        raise InputError(f"vertices {bad} are out of range 0..{n - 1}")
    return R


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    return _report(g, _parse_set(args.set, g.n), args.json)


def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    fam, s = args.family, args.seed
    if fam == "path":
        obj = generators.random_temporal_path(args.n, args.label_max, s)[0]
    elif fam == "substar":
        obj = generators.random_subdivided_star(args.degree, args.max_branch_len, s,
                                                labels=args.labels, period=args.period)[0]
    elif fam == "periodic-tree":
        obj = generators.random_periodic_tree(args.n, args.period, s)
    elif fam == "3dm":
        obj = generators.random_3dm(args.p_size, args.s, args.n, s, target=args.target)
    elif fam == "connected":
        edges = generators.random_connected_graph(args.n, s, args.extra_prob)
        obj = TemporalGraph.finite(args.n, {e: [1] for e in edges})
    elif fam == "complete-tight":
        obj = periodic.build_complete_tight(args.b, args.period)[0]
    elif fam == "complete-worst":
        obj = periodic.build_complete_worst(args.n, args.period)
    elif fam == "binary-alternating":
        obj = periodic.build_binary_tree_alternating(args.levels)[0]
    elif fam == "binary-uniform":
        obj = periodic.build_binary_tree_uniform(args.levels)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown family {fam}")
    _emit(serialize_instance(obj), args.output)
    return EXIT_OK


def cmd_reduce(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as f:
            obj = parse_instance(f.read())
    except OSError as e:
        raise InputError(str(e)) from None
    except ParseError as e:
        raise InputError(f"{args.input}: {e}") from None
    kind = args.kind
    if kind == "adjacency-complete":
        if not isinstance(obj, TemporalGraph):
            raise InputError("adjacency-complete expects a temporal-graph file (labels are ignored)")
        g, budget = reductions.reduce_adjacency_to_complete(obj.n, obj.edges), None
    else:
        if not isinstance(obj, reductions.ThreeDMInstance):
            raise InputError(f"{kind} expects a 3dm instance")
        if kind == "3dm-substar":
            g, budget = reductions.reduce_3dm_to_substar(obj, args.budget)
        elif kind == "3dm-tree":
            g, budget = reductions.reduce_3dm_to_tree(obj, normalized=not args.raw)
        else:
            g, budget = reductions.reduce_3dm_to_tree_intervals(obj, normalized=not args.raw)
    text = serialize_instance(g)
    if args.json:
        _emit(json.dumps({"budget": budget, "instance": text}, sort_keys=True) + "\n", args.output)
    else:
        _emit(("" if budget is None else f"# budget {budget}\n") + text, args.output)
    return EXIT_OK


# --- parser ----------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tempres", description="Temporal resolving sets.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a minimum temporal resolving set")
    p.add_argument("--input", required=True)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--pool", choices=("all", "leaves"), default="all",
                   help="candidate vertices for bruteforce")
    p.add_argument("--reverse", action="store_true", help="scan a finite path from its other end")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--unsafe-no-guard", action="store_true",
                   help=f"allow exhaustive search beyond n={BRUTE_N_GUARD} / pool={BRUTE_POOL_GUARD}")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a landmark set and print its certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--set", required=True, help='comma-separated vertices, e.g. "0,3,5"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random or constructed instance")
    p.add_argument("family", choices=("path", "substar", "periodic-tree", "3dm", "connected",
                                      "complete-tight", "complete-worst",
                                      "binary-alternating", "binary-uniform"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=_positive, default=8)
    p.add_argument("--label-max", type=_positive, default=4)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--max-branch-len", type=_positive, default=3)
    p.add_argument("--labels", type=_positive, nargs="+", default=[1, 2])
    p.add_argument("--period", type=_positive, default=None)
    p.add_argument("--p-size", type=_positive, default=2)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--extra-prob", type=float, default=0.3)
    p.add_argument("--b", type=_positive, default=2)
    p.add_argument("--levels", type=_positive, default=3)
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="build a reduction gadget from an instance")
    p.add_argument("kind", choices=("3dm-substar", "3dm-tree", "3dm-tree-intervals",
                                    "adjacency-complete"))
    p.add_argument("--input", required=True)
    p.add_argument("--budget", choices=reductions.BUDGETS, default="proof")
    p.add_argument("--raw", action="store_true", help="keep tree labels unshifted")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_reduce)
    return ap


def _needs_period(args) -> bool:
    return args.command == "generate" and args.family in (
        "periodic-tree", "complete-tight", "complete-worst")


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if _needs_period(args) and args.period is None:
        args.period = 2
    try:
        return args.func(args)
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
