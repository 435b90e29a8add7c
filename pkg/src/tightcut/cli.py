"""Command-line front end: ``tightcut {solve,bench,gen,reduce}``.

Exit status: 0 on success, 2 on malformed input or usage errors, 3 when a
budget or time limit is exceeded.  ``FAS_SEED`` in the environment overrides
every ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .bench import ALGOS, BenchConfig, ingest_circuit, run_bench, run_config
from .errors import GraphDomainError, GraphParseError, ResourceLimitError, SolverTimeout
from .generators import (
    FAMILIES,
    gen_erdos_renyi,
    gen_perturbed_planar,
    gen_planted,
    gen_tournament,
)
from .graph import total_weight
from .io import (
    format_mapping,
    format_solution,
    format_weights,
    read_graph,
    read_vertex_weights,
    write_graph,
)
from .oracle import DEFAULT_BUDGET, exact_fas, exact_fvs, greedy_removal
from .reductions import dual_graph, line_graph, solve_fvsp
from .solver import SolverConfig, tight_cut, tight_cut_star

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3


def _seed(args) -> int:
    env = os.environ.get("FAS_SEED")
    if env is not None and env.strip():
        try:
            return int(env)
        except ValueError:
            raise GraphDomainError(f"FAS_SEED must be an integer, got {env!r}") from None
    return args.seed


def _param(kv: str) -> tuple[str, object]:
    key, _, val = kv.partition("=")
    try:
        return key, json.loads(val)
    except json.JSONDecodeError:
        return key, val


def _cmd_solve(args) -> int:
    g, arc_w = read_graph(args.input)
    cfg = SolverConfig(n=args.n, N=args.N, seed=_seed(args), time_limit=args.time_limit)
    guess = None
    start = time.perf_counter()
    if args.fvsp:
        psi = {v: 1.0 for v in g.vertices}
        if args.weights:
            psi.update(read_vertex_weights(args.weights))
        if args.algo == "exact":
            res = exact_fvs(g, psi, args.budget, time_limit=args.time_limit)
            ids, weight = res.one_solution, res.optimum
        elif args.algo == "gr":
            raise GraphDomainError("gr is an arc heuristic; use tightcut, tightcut-star or exact with --fvsp")
        else:
            solver = tight_cut if args.algo == "tightcut" else tight_cut_star
            ids, weight = solve_fvsp(g, psi, cfg, solver=solver)
        kind = "vertices"
    else:
        if args.weights:
            arc_w.update(read_vertex_weights(args.weights))
        if args.algo == "exact":
            res = exact_fas(g, arc_w, args.budget, time_limit=args.time_limit)
            ids, weight = res.one_solution, res.optimum
        elif args.algo == "gr":
            ids = greedy_removal(g)
            weight = total_weight(arc_w, ids)
        else:
            solver = tight_cut if args.algo == "tightcut" else tight_cut_star
            res = solver(g, arc_w, cfg)
            ids, weight, guess = res.feedback_arcs, res.total_weight, res.guess_weight
        kind = "arcs"
    elapsed = time.perf_counter() - start
    if args.json:
        doc = {"algo": args.algo, "kind": kind, "ids": sorted(ids), "weight": weight,
               "guessWeight": guess, "wallTime": elapsed}
        print(json.dumps(doc, sort_keys=True))
    else:
        text = format_solution(ids, weight)
        header, _, body = text.partition("\n")
        extra = "" if guess is None else f"# guess_weight {guess:g}\n"
        sys.stdout.write(f"{header}\n{extra}# time {elapsed:.6f}\n{body}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_solution(ids, weight))
    return EXIT_OK


def _cmd_bench(args) -> int:
    seed = _seed(args)
    algos = [a for a in args.algos.split(",") if a]
    if args.inputs:
        instances = [(os.path.basename(p), ingest_circuit(p)) for p in args.inputs]
        report = run_bench(instances, algos, args.timeout, args.oracle, args.budget, seed, args.n, args.N)
    else:
        conf = {}
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                conf = json.load(fh)
        params = dict(conf.get("params", {}))
        params.update(_param(kv) for kv in args.param or ())
        sizes = conf.get("sizes", [])
        if args.sizes:
            sizes = [int(x) for x in args.sizes.split(",") if x]
        cfg = BenchConfig(
            family=args.family or conf.get("family", "planted"),
            sizes=sizes,
            instances=args.instances if args.instances is not None else conf.get("instances", 10),
            seed=seed,
            algos=algos or conf.get("algos", ["tightcut-star", "gr"]),
            timeout=args.timeout,
            params=params,
            oracle=args.oracle or bool(conf.get("oracle", False)),
            oracle_budget=args.budget,
            n=args.n,
            N=args.N,
        )
        report = run_config(cfg)
    report.write(args.out, solutions=args.solutions)
    json.dump(report.summary, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = _seed(args)
    fam = args.family
    if fam == "erdos-renyi":
        inst = gen_erdos_renyi(args.vertices, args.p, seed)
    elif fam == "tournament":
        inst = gen_tournament(args.vertices, seed)
    elif fam == "perturbed-planar":
        inst = gen_perturbed_planar(args.vertices, args.rewire, seed)
    else:
        if args.arcs is None:
            raise GraphDomainError("--arcs is required for the planted family")
        inst = gen_planted(args.vertices, args.arcs, args.k, args.weighted, seed)
    write_graph(args.out, inst.graph, inst.weights)
    with open(args.out + ".json", "w", encoding="utf-8") as fh:
        json.dump(inst.sidecar(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return EXIT_OK


def _cmd_reduce(args) -> int:
    g, arc_w = read_graph(args.input)
    if args.to == "line":
        res = line_graph(g, arc_w)
        write_graph(args.out, res.graph)
        with open(args.out + ".vw", "w", encoding="utf-8") as fh:
            fh.write(format_weights(res.psi_l))
        pairs = sorted(res.vertex_of.items())
    else:
        psi = {v: 1.0 for v in g.vertices}
        if args.weights:
            psi.update(read_vertex_weights(args.weights))
        res = dual_graph(g, psi)
        write_graph(args.out, res.graph, res.weights)
        pairs = sorted(res.f_arc_of.items())
    with open(args.out + ".map", "w", encoding="utf-8") as fh:
        fh.write(format_mapping(pairs))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tightcut", description="Feedback arc and vertex set solver.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one graph file")
    s.add_argument("input")
    s.add_argument("--weights", help="'id weight' lines overriding arc weights (vertex weights with --fvsp)")
    s.add_argument("--algo", choices=ALGOS, default="tightcut-star")
    s.add_argument("--n", type=int, default=3, help="arcs deleted per probe")
    s.add_argument("--N", type=int, default=20, help="probes per stall")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--fvsp", action="store_true", help="feedback vertex set via the dual digraph")
    s.add_argument("--json", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="exact search node limit")
    s.add_argument("--time-limit", type=float, default=None)
    s.add_argument("--output", help="also write the solution file here")
    s.set_defaults(func=_cmd_solve)

    b = sub.add_parser("bench", help="run a benchmark grid")
    b.add_argument("--config", help="JSON file with family, sizes, instances, params, algos, oracle")
    b.add_argument("--family", choices=FAMILIES)
    b.add_argument("--sizes", help="comma-separated vertex counts")
    b.add_argument("--instances", type=int)
    b.add_argument("--param", action="append", help="family parameter key=value (repeatable)")
    b.add_argument("--inputs", nargs="*", help="edge-list files instead of a generated grid")
    b.add_argument("--algos", default="tightcut-star,gr")
    b.add_argument("--timeout", type=float, default=60.0)
    b.add_argument("--oracle", action="store_true", help="compute exact truth when none is planted")
    b.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--n", type=int, default=3)
    b.add_argument("--N", type=int, default=20)
    b.add_argument("--out", default="bench-out")
    b.add_argument("--solutions", action="store_true", help="write one solution file per row")
    b.set_defaults(func=_cmd_bench)

    gp = sub.add_parser("gen", help="generate an instance")
    gp.add_argument("family", choices=FAMILIES)
    gp.add_argument("--vertices", type=int, required=True)
    gp.add_argument("--arcs", type=int, help="planted: total arc count")
    gp.add_argument("--k", type=int, default=1, help="planted: certificate cycles")
    gp.add_argument("--weighted", action="store_true", help="planted: integer weights 1..10")
    gp.add_argument("--p", type=float, default=0.05, help="erdos-renyi arc probability")
    gp.add_argument("--rewire", type=float, default=0.1, help="perturbed-planar rewire fraction")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--out", required=True)
    gp.set_defaults(func=_cmd_gen)

    r = sub.add_parser("reduce", help="write the line graph or dual digraph")
    r.add_argument("input")
    r.add_argument("--to", choices=("line", "dual"), required=True)
    r.add_argument("--weights", help="vertex weights for --to dual")
    r.add_argument("--out", required=True)
    r.set_defaults(func=_cmd_reduce)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, GraphDomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ResourceLimitError, SolverTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
