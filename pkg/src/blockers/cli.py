"""Command-line front end.

Exit codes: 0 yes / success, 1 no, 2 unsupported class or combination,
3 bad input or a failed precondition.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path
from typing import Callable, Optional

from . import generators as gen
from .errors import BlockerError
from .graph import (Graph, apply_witness, format_edge_list, format_witness,
                    parse_edge_list, parse_witness)
from .oracle import BlockerInstance, oracle_decide, oracle_min_k, verify_witness
from .params import Parameter, omega, parameter_value
from .recognize import (IntervalModel, classify, cotree, is_3p1_free, is_bipartite,
                        is_cobipartite, is_cograph, is_p1p3_free, is_split, is_tree,
                        is_triangle_free, named_graph, split_partition,
                        validate_interval_model, is_chordal, is_c4_free)
from . import reductions as red
from . import solvers
from .solvers.cograph import cograph_min_k

EXIT_YES, EXIT_NO, EXIT_UNSUPPORTED, EXIT_ERROR = 0, 1, 2, 3

CLASS_ORDER = ["tree", "cograph", "split", "interval", "bipartite", "cobipartite",
               "3p1free", "p1p3free", "trianglefree"]

RECOGNIZERS: dict[str, Callable[[Graph], bool]] = {
    "tree": is_tree,
    "cograph": is_cograph,
    "split": is_split,
    "bipartite": is_bipartite,
    "cobipartite": is_cobipartite,
    "3p1free": is_3p1_free,
    "p1p3free": is_p1p3_free,
    "trianglefree": is_triangle_free,
}

# Known complexity of the combinations without a solver here, per class and
# (parameter column, operation).  Omega and chi share a column.
KNOWN_STATUS = {
    ("tree", "omega", "contract"): "polynomial (not implemented here)",
    ("tree", "alpha", "delete"): "polynomial by earlier work (not implemented here)",
    ("bipartite", "alpha", "contract"): "NP-hard",
    ("bipartite", "omega", "contract"): "polynomial (not implemented here)",
    ("bipartite", "alpha", "delete"): "polynomial by earlier work (not implemented here)",
    ("cobipartite", "alpha", "contract"): "NP-complete already for d = 1",
    ("cobipartite", "omega", "contract"): "NP-complete; polynomial for fixed d",
    ("cobipartite", "omega", "delete"): "polynomial by earlier work (not implemented here)",
    ("split", "alpha", "delete"): "NP-complete; polynomial for fixed d by earlier work (not implemented here)",
    ("split", "omega", "delete"): "NP-complete; polynomial for fixed d by earlier work (not implemented here)",
    ("interval", "alpha", "contract"): "open",
    ("interval", "alpha", "delete"): "open",
}


def _column(pi: Parameter) -> str:
    return "alpha" if pi is Parameter.ALPHA else "omega"


SUPPORTED = {
    "tree": {("alpha", "contract")},
    "cograph": {(p.value, k) for p in Parameter for k in ("contract", "delete")},
    "split": {(p.value, "contract") for p in Parameter},
    "interval": {(p, k) for p in ("omega", "chi") for k in ("contract", "delete")},
    "bipartite": {("omega", "delete"), ("chi", "delete")},
    "cobipartite": {("alpha", "delete")},
    "3p1free": {("chi", "contract"), ("chi", "delete")},
    "p1p3free": {("chi", "delete")},
    "trianglefree": {("omega", "contract")},
}


def _supported(cls: str, pi: Parameter, kind: str) -> bool:
    return (pi.value, kind) in SUPPORTED[cls]


def _run_solver(cls: str, inst: BlockerInstance, model: Optional[IntervalModel]) -> solvers.SolverAnswer:
    g, pi, kind, d, k = inst.graph, inst.pi, inst.kind, inst.d, inst.k
    if cls == "tree":
        return solvers.tree_contraction_blocker_alpha(g, d, k)
    if cls == "cograph":
        ans = solvers.cograph_decide(g, pi, kind, d, k)
        return solvers.SolverAnswer(ans.decision, ans.witness, cograph_min_k(g, pi, kind, d))
    if cls == "split":
        return solvers.split_contraction_blocker(g, pi, d, k)
    if cls == "interval":
        fn = solvers.interval_contraction_blocker if kind == "contract" else solvers.interval_deletion_blocker
        return fn(model, pi, d, k, graph=g)
    if cls == "bipartite":
        return solvers.bipartite_deletion_blocker(g, pi, d, k)
    if cls == "cobipartite":
        return solvers.cobipartite_deletion_blocker_alpha(g, d, k)
    if cls == "3p1free":
        if kind == "contract":
            return solvers.contraction_blocker_chi_3p1free(g, d, k)
        return solvers.deletion_blocker_chi_3p1free(g, d, k)
    if cls == "p1p3free":
        return solvers.deletion_blocker_chi_p1p3free(g, d, k)
    if cls == "trianglefree":
        return solvers.triangle_free_contraction_blocker_omega(g, d, k)
    raise ValueError(cls)


def _in_class(cls: str, g: Graph, model: Optional[IntervalModel]) -> bool:
    if cls == "interval":
        return model is not None and validate_interval_model(g, model)
    return RECOGNIZERS[cls](g)


# -- helpers ----------------------------------------------------------------------

def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_instance(path: str) -> BlockerInstance:
    return BlockerInstance.from_json(_read(path))


def _guard_kw(args) -> dict:
    if args.size_guard is None:
        return {}
    return {"size_guard": args.size_guard or None}


def _witness_json(ops) -> Optional[list[str]]:
    return None if ops is None else [str(op) for op in ops]


# -- subcommands ----------------------------------------------------------------------

def cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    model = IntervalModel.parse(_read(args.model)) if args.model else None
    if args.force_oracle:
        res = oracle_decide(inst, **_guard_kw(args))
        return _report(args, res.feasible, res.min_k, res.witness, "oracle", "oracle")
    classes = CLASS_ORDER if args.cls == "auto" else [args.cls]
    recognized = []
    for cls in classes:
        if cls == "interval" and model is None:
            if args.cls == "interval":
                print("the interval solver needs --model", file=sys.stderr)
                return EXIT_ERROR
            continue
        if not _in_class(cls, inst.graph, model):
            continue
        recognized.append(cls)
        if _supported(cls, inst.pi, inst.kind):
            ans = _run_solver(cls, inst, model)
            return _report(args, ans.decision, ans.min_k, ans.witness, cls, cls)
    combo = f"{inst.pi.value} {inst.kind}"
    if not recognized:
        msg = (f"graph is not in class {args.cls}" if args.cls != "auto"
               else "graph is in none of the supported classes")
    else:
        msg = "; ".join(
            f"{cls} + {combo}: " + KNOWN_STATUS.get((cls, _column(inst.pi), inst.kind),
                                                   "no algorithm implemented here")
            for cls in recognized)
    print(f"unsupported: {msg}; use --force-oracle for small graphs", file=sys.stderr)
    if args.json:
        print(json.dumps({"supported": False, "message": msg}))
    return EXIT_UNSUPPORTED


def _report(args, decision: bool, min_k, witness, cls: str, solver: str) -> int:
    if args.witness and witness is not None and decision:
        Path(args.witness).write_text(format_witness(witness))
    if args.json:
        print(json.dumps({"decision": decision, "min_k": min_k, "class": cls,
                          "solver": solver, "witness": _witness_json(witness)}))
    else:
        text = "yes" if decision else "no"
        if min_k is not None:
            text += f", min_k={min_k}"
        print(f"{text} [{solver}]")
    return EXIT_YES if decision else EXIT_NO


def cmd_oracle(args) -> int:
    inst = _load_instance(args.instance)
    res = oracle_min_k(inst.graph, inst.pi, inst.kind, inst.d, **_guard_kw(args))
    decision = res.feasible and res.min_k <= inst.k
    if args.witness and decision:
        Path(args.witness).write_text(format_witness(res.witness))
    if args.json:
        print(json.dumps({"decision": decision, "feasible": res.feasible, "min_k": res.min_k,
                          "witness": _witness_json(res.witness)}))
    else:
        mk = "infeasible" if not res.feasible else str(res.min_k)
        print(f"{'yes' if decision else 'no'}, min_k={mk}")
    return EXIT_YES if decision else EXIT_NO


def cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    ops = parse_witness(_read(args.witness))
    ok = verify_witness(inst, ops)
    before = parameter_value(inst.graph, inst.pi, limit=None)
    after = parameter_value(apply_witness(inst.graph, ops), inst.pi, limit=None) \
        if len(ops) <= inst.k else None
    if args.json:
        print(json.dumps({"valid": ok, "before": before, "after": after, "ops": len(ops)}))
    else:
        print(f"{'true' if ok else 'false'} ({inst.pi.value}: {before} -> {after})")
    return EXIT_YES if ok else EXIT_NO


def _load_graph_arg(text: str) -> Graph:
    path = Path(text)
    if path.exists() or text == "-":
        return parse_edge_list(_read(text))
    return named_graph(text)


def cmd_recognize(args) -> int:
    g = _load_graph_arg(args.graph)
    found = {cls: fn(g) for cls, fn in RECOGNIZERS.items()}
    found["chordal"] = is_chordal(g)
    found["c4free"] = is_c4_free(g)
    info: dict = {"classes": [c for c, ok in found.items() if ok]}
    if found["cograph"] and g.n:
        info["cotree"] = cotree(g).dump()
    elif g.n:
        info["p4"] = list(cotree(g).p4)
    part = split_partition(g, "minimal")
    if part is not None:
        info["split"] = {"K": sorted(part.K), "I": sorted(part.I)}
    if args.json:
        print(json.dumps(info))
    else:
        print("classes: " + (" ".join(info["classes"]) or "none"))
        for key in ("cotree", "p4", "split"):
            if key in info:
                print(f"{key}: {info[key]}")
    return EXIT_YES


def cmd_classify(args) -> int:
    h = _load_graph_arg(args.graph)
    verdict = classify(h, args.pi, args.kind)
    if args.json:
        print(json.dumps({"verdict": verdict.verdict, "citation": verdict.citation}))
    else:
        print(verdict)
    return EXIT_YES


def cmd_reduce(args) -> int:
    text = _read(args.input)
    source = args.source
    if source == "rbds":
        rb = red.RbdsInstance.parse(text)
        inst = (red.reduce_rbds_to_split_chi(rb) if args.pi == "chi"
                else red.reduce_rbds_to_split_alpha(rb))
    elif source == "1in3sat":
        f = red.CnfFormula.parse_dimacs(text)
        inst = red.reduce_1in3sat_to_omega(f)
        if args.lift:
            inst = red.lift_to_c4free_perfect(inst.graph, inst.k)
    else:
        g = parse_edge_list(text)
        if source == "vc":
            inst = red.reduce_vc_to_chordal(g, _need(args.k, "--k"))
        elif source == "biclique":
            inst = red.reduce_biclique_to_cobipartite_chi(g)
        elif source == "cliqueproof":
            inst = red.clique_proof_lift(g, _need(args.l, "--l"))
        elif source == "girth":
            inst = red.reduce_forced_vertex(g, _need(args.p, "--p"))
        elif source == "cobipartite":
            inst = red.reduce_cobipartite_alpha_to_bipartite(g, _need(args.k, "--k"))
        else:
            raise ValueError(source)
    _emit(args, inst.to_json() + "\n")
    return EXIT_YES


def _need(value, flag: str):
    if value is None:
        raise BlockerError(f"{flag} is required for this reduction")
    return value


GENERATORS = {
    "tree": gen.random_tree,
    "cograph": gen.random_cograph,
    "split": gen.random_split,
    "cobipartite": gen.random_cobipartite,
    "trianglefree": gen.random_triangle_free,
    "3p1free": gen.random_3p1free,
    "p1p3free": gen.random_p1p3free,
    "bipartite": gen.random_bipartite,
}

CERTIFY = dict(RECOGNIZERS)


def cmd_gen(args) -> int:
    if args.cls == "interval":
        g, model = gen.random_interval(args.n, args.seed)
        if not validate_interval_model(g, model):
            raise AssertionError("generated interval model failed validation")
        if args.model_out:
            Path(args.model_out).write_text(model.format())
    else:
        g = GENERATORS[args.cls](args.n, args.seed)
        if not CERTIFY[args.cls](g):
            raise AssertionError(f"generated graph is not in class {args.cls}")
    _emit(args, format_edge_list(g))
    return EXIT_YES


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def bench_rows(suite: str = "core", seed: int = 0):
    """Rows ``(class, n, d, solver_seconds, oracle_seconds)``."""
    if suite != "core":
        raise BlockerError(f"unknown bench suite {suite!r}")
    rows = []
    for n in (50, 100, 200):
        g, model = gen.random_interval(n, seed)
        w = omega(g, limit=None)
        d = min(2, w)
        t = _timed(lambda: solvers.interval_contraction_blocker(model, "omega", d))
        rows.append(("interval-contract", n, d, t, None))
        t = _timed(lambda: solvers.interval_deletion_blocker(model, "omega", d))
        rows.append(("interval-delete", n, d, t, None))
    for n in (50, 100):
        g = gen.random_cograph(n, seed)
        t = _timed(lambda: solvers.cograph_blocker(g, "alpha", 2, 2))
        rows.append(("cograph-alpha", n, None, t, None))
        t = _timed(lambda: solvers.cograph_blocker(g, "chi", 2, 2))
        rows.append(("cograph-chi", n, None, t, None))
    g = gen.random_graph(8, 0.5, seed)
    t = _timed(lambda: oracle_min_k(g, "alpha", "contract", 2))
    rows.append(("oracle-contract", 8, 2, None, t))
    return rows


def cmd_bench(args) -> int:
    rows = bench_rows(args.suite, args.seed)
    handle = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(handle)
        writer.writerow(["class", "n", "d", "solver_seconds", "oracle_seconds"])
        for cls, n, d, ts, to in rows:
            writer.writerow([cls, n, "" if d is None else d,
                             "" if ts is None else f"{ts:.6f}",
                             "" if to is None else f"{to:.6f}"])
    finally:
        if args.out:
            handle.close()
    return EXIT_YES


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blockers",
                                description="Contraction and deletion blockers for alpha, omega and chi.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide an instance with a class-specific algorithm")
    s.add_argument("instance")
    s.add_argument("--class", dest="cls", default="auto", choices=["auto"] + CLASS_ORDER)
    s.add_argument("--model", help="interval model file (lines 'v l r')")
    s.add_argument("--force-oracle", action="store_true",
                   help="answer with the exhaustive oracle instead")
    s.add_argument("--witness", help="write the witness here when the answer is yes")
    s.add_argument("--size-guard", type=int, help="oracle vertex limit, 0 for none")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("oracle", help="exact answer by exhaustive search")
    s.add_argument("instance")
    s.add_argument("--witness")
    s.add_argument("--size-guard", type=int, help="vertex limit, 0 for none")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", help="replay a witness against an instance")
    s.add_argument("instance")
    s.add_argument("witness")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("recognize", help="list the classes a graph belongs to")
    s.add_argument("graph", help="edge-list file or a name such as P4, C5, paw")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("classify", help="complexity of a blocker problem on H-free graphs")
    s.add_argument("graph", help="edge-list file for H, or a name such as P4, paw, P1+P3")
    s.add_argument("--pi", required=True, choices=[x.value for x in Parameter])
    s.add_argument("--kind", required=True, choices=["contract", "delete"])
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("reduce", help="build a blocker instance from a source problem")
    s.add_argument("input")
    s.add_argument("--from", dest="source", required=True,
                   choices=["rbds", "1in3sat", "vc", "biclique", "cliqueproof", "girth",
                            "cobipartite"])
    s.add_argument("--pi", default="alpha", choices=["alpha", "chi"],
                   help="target parameter for rbds")
    s.add_argument("--lift", action="store_true",
                   help="1in3sat: apply the C4-free perfect lift")
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("gen", help="random graph from a class")
    s.add_argument("--class", dest="cls", required=True,
                   choices=sorted(GENERATORS) + ["interval"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.add_argument("--model-out", help="interval: write the model here")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time the solvers and write CSV")
    s.add_argument("--suite", default="core")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BlockerError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
