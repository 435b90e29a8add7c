"""Benchmark harness: instance grids, per-solve rows, ratio aggregates, reports.

A report holds one row per ``(instance, algorithm)``.  Ratios are
``weight / truth`` where the truth is the planted optimum when the generator
provides one, else the exact optimum when the oracle was requested, else
absent.  Wall times live in the CSV and in a separate timing file so that
the JSON report is byte-identical across runs with the same seeds.
"""

from __future__ import annotations

import csv
import json
import math
import os
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceLimitError, SolverTimeout
from .generators import (
    Instance,
    gen_erdos_renyi,
    gen_perturbed_planar,
    gen_planted,
    gen_tournament,
)
from .graph import total_weight, verify_feedback
from .io import format_solution, read_graph
from .oracle import DEFAULT_BUDGET, exact_fas, greedy_removal
from .solver import SolverConfig, tight_cut, tight_cut_star

ALGOS = ("tightcut", "tightcut-star", "gr", "exact")
RATIO_TOL = 1e-9


def ingest_circuit(path: str | os.PathLike) -> Instance:
    """Load an edge list (e.g. a converted circuit netlist) as an unweighted instance."""
    g, _ = read_graph(path)
    return Instance(g, {a: 1.0 for a in g.arcs}, "external", 0,
                    params={"source": os.path.basename(os.fspath(path))})


def make_instance(family: str, n_vertices: int, params: dict, seed: int) -> Instance:
    """Build one instance of ``family`` with ``n_vertices`` vertices.

    Recognised ``params``: ``p`` (erdos-renyi arc probability, default
    ``2 / n``), ``rewire`` (perturbed-planar, default 0.1), and for planted
    ``k`` (default ``max(1, n // 10)``), ``density`` (fraction of ordered
    pairs) or ``arcs_per_vertex`` (default 3), ``weighted`` (default false).
    """
    n = n_vertices
    if family == "erdos-renyi":
        return gen_erdos_renyi(n, float(params.get("p", min(1.0, 2.0 / max(n, 1)))), seed)
    if family == "tournament":
        return gen_tournament(n, seed)
    if family == "perturbed-planar":
        return gen_perturbed_planar(n, float(params.get("rewire", 0.1)), seed)
    if family == "planted":
        k = int(params.get("k", max(1, n // 10)))
        if "density" in params:
            m = int(round(float(params["density"]) * n * (n - 1)))
        else:
            m = int(round(float(params.get("arcs_per_vertex", 3)) * n))
        return gen_planted(n, m, k, bool(params.get("weighted", False)), seed)
    raise ValueError(f"unknown family {family!r}")


def instance_seed(seed: int, cell: int, index: int) -> int:
    """Independent, reproducible seed for the ``index``-th instance of a grid cell."""
    return int(np.random.SeedSequence([seed, cell, index]).generate_state(1)[0])


@dataclass
class BenchConfig:
    family: str = "planted"
    sizes: Sequence[int] = ()
    instances: int = 10
    seed: int = 0
    algos: Sequence[str] = ("tightcut-star", "gr")
    timeout: float = 60.0
    params: dict = field(default_factory=dict)
    oracle: bool = False
    oracle_budget: int = DEFAULT_BUDGET
    n: int = 3
    N: int = 20

    def __post_init__(self):
        bad = [a for a in self.algos if a not in ALGOS]
        if bad:
            raise ValueError(f"unknown algorithms {bad}; choose from {ALGOS}")

    def build(self) -> list[tuple[str, Instance]]:
        out = []
        for cell, n in enumerate(self.sizes):
            for j in range(self.instances):
                inst = make_instance(self.family, int(n), self.params, instance_seed(self.seed, cell, j))
                out.append((f"{self.family}-{n}-{j}", inst))
        return out


@dataclass(frozen=True)
class Row:
    instance_id: str
    family: str
    n_vertices: int
    n_arcs: int
    algo: str
    status: str  # ok | timeout | budget
    weight: float | None
    truth: float | None
    truth_source: str | None
    ratio: float | None
    feedback_arcs: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        d = {
            "instanceId": self.instance_id,
            "family": self.family,
            "nVertices": self.n_vertices,
            "nArcs": self.n_arcs,
            "algo": self.algo,
            "status": self.status,
            "weight": self.weight,
            "truth": self.truth,
            "truthSource": self.truth_source,
        }
        if self.ratio is not None:
            d["ratio"] = self.ratio
        return d


def _percentile(xs: list[float], q: float) -> float:
    return float(np.percentile(np.asarray(xs, dtype=float), q, method="linear"))


def aggregate(rows: Iterable[Row]) -> dict[str, dict]:
    """Per-algorithm summary, a pure function of the rows."""
    by_algo: dict[str, list[Row]] = {}
    for r in rows:
        by_algo.setdefault(r.algo, []).append(r)
    out = {}
    for algo in sorted(by_algo):
        rs = by_algo[algo]
        ok = [r for r in rs if r.status == "ok"]
        ratios = [r.ratio for r in ok if r.ratio is not None]
        s = {
            "rows": len(rs),
            "solved": len(ok),
            "timeouts": sum(r.status == "timeout" for r in rs),
            "budgetExceeded": sum(r.status == "budget" for r in rs),
            "meanWeight": float(np.mean([r.weight for r in ok])) if ok else None,
        }
        if ratios:
            s["medianRatio"] = _percentile(ratios, 50)
            s["p95Ratio"] = _percentile(ratios, 95)
            s["maxRatio"] = max(ratios)
            s["exactFraction"] = sum(x <= 1 + RATIO_TOL for x in ratios) / len(ratios)
        out[algo] = s
    return out


@dataclass
class BenchmarkReport:
    rows: list[Row]
    times: list[float]

    @property
    def summary(self) -> dict[str, dict]:
        return aggregate(self.rows)

    def to_json(self) -> str:
        """Deterministic JSON (no wall times)."""
        doc = {"rows": [r.as_dict() for r in self.rows], "summary": self.summary}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def timing_json(self) -> str:
        doc = [{"instanceId": r.instance_id, "algo": r.algo, "wallTime": t}
               for r, t in zip(self.rows, self.times)]
        return json.dumps(doc, indent=2) + "\n"

    def write_csv(self, path: str | os.PathLike) -> None:
        cols = ["instanceId", "family", "nVertices", "nArcs", "algo", "status",
                "weight", "truth", "truthSource", "ratio", "wallTime"]
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.DictWriter(fh, fieldnames=cols)
            w.writeheader()
            for r, t in zip(self.rows, self.times):
                d = r.as_dict()
                d["wallTime"] = f"{t:.6f}"
                w.writerow({k: ("" if d.get(k) is None else d.get(k)) for k in cols})

    def write(self, out_dir: str | os.PathLike, solutions: bool = False) -> None:
        """``report.json``, ``report.csv``, ``timings.json`` and optionally one solution file per row."""
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, "report.json"), "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
        with open(os.path.join(out_dir, "timings.json"), "w", encoding="utf-8") as fh:
            fh.write(self.timing_json())
        self.write_csv(os.path.join(out_dir, "report.csv"))
        if solutions:
            sol_dir = os.path.join(out_dir, "solutions")
            os.makedirs(sol_dir, exist_ok=True)
            for r in self.rows:
                if r.status == "ok":
                    with open(os.path.join(sol_dir, f"{r.instance_id}.{r.algo}.sol"), "w",
                              encoding="utf-8") as fh:
                        fh.write(format_solution(r.feedback_arcs, r.weight))


def solve_once(algo: str, inst: Instance, cfg: SolverConfig, budget: int = DEFAULT_BUDGET):
    """Run one algorithm; returns the feedback arc set."""
    if algo == "tightcut":
        return tight_cut(inst.graph, inst.weights, cfg).feedback_arcs
    if algo == "tightcut-star":
        return tight_cut_star(inst.graph, inst.weights, cfg).feedback_arcs
    if algo == "gr":
        return greedy_removal(inst.graph)
    if algo == "exact":
        return exact_fas(inst.graph, inst.weights, budget, time_limit=cfg.time_limit).one_solution
    raise ValueError(f"unknown algorithm {algo!r}")


def run_bench(instances: Sequence[tuple[str, Instance]], algos: Sequence[str] = ("tightcut-star", "gr"),
              timeout: float | None = 60.0, oracle: bool = False, oracle_budget: int = DEFAULT_BUDGET,
              seed: int = 0, n: int = 3, N: int = 20) -> BenchmarkReport:
    """Solve every instance with every algorithm, in order.

    A solve that exceeds ``timeout`` (checked cooperatively) or the oracle
    budget becomes a ``timeout`` / ``budget`` row; other rows are unaffected.
    """
    rows: list[Row] = []
    times: list[float] = []
    for iid, inst in instances:
        g, w = inst.graph, inst.weights
        truth, source = inst.planted_optimum, "planted" if inst.planted_optimum is not None else None
        if truth is None and oracle:
            try:
                truth = exact_fas(g, w, oracle_budget, time_limit=timeout).optimum
                source = "oracle"
            except (ResourceLimitError, SolverTimeout):
                truth = None
        cfg = SolverConfig(n=n, N=N, seed=seed, time_limit=timeout)
        for algo in algos:
            start = time.perf_counter()
            try:
                arcs = solve_once(algo, inst, cfg, oracle_budget)
                status = "ok"
            except SolverTimeout:
                arcs, status = None, "timeout"
            except ResourceLimitError:
                arcs, status = None, "budget"
            times.append(time.perf_counter() - start)
            if arcs is None:
                rows.append(Row(iid, inst.family, g.n_vertices, g.n_arcs, algo, status,
                                None, truth, source, None))
                continue
            if not verify_feedback(g, arcs):
                raise AssertionError(f"{algo} returned a non-feedback set on {iid}")
            weight = total_weight(w, arcs)
            ratio = None
            if truth is not None and truth > 0:
                ratio = weight / truth
            elif truth == 0:
                ratio = 1.0 if weight == 0 else math.inf
            rows.append(Row(iid, inst.family, g.n_vertices, g.n_arcs, algo, status,
                            weight, truth, source, ratio, tuple(sorted(arcs))))
    return BenchmarkReport(rows, times)


def run_config(cfg: BenchConfig) -> BenchmarkReport:
    return run_bench(cfg.build(), cfg.algos, cfg.timeout, cfg.oracle, cfg.oracle_budget,
                     cfg.seed, cfg.n, cfg.N)
