"""TIGHT-CUT* against greedy removal on planted instances of known optimum.

Each planted graph hides k vertex-disjoint cycles in an otherwise acyclic
graph, so the optimum is known without an exact solver.

Run:  python3 demos/planted_benchmark.py
"""

import time

import numpy as np

from tightcut import SolverConfig, gen_planted, greedy_removal, tight_cut_star, total_weight

rng = np.random.default_rng(7)
print(f"{'|V|':>4} {'|E|':>5} {'opt':>5} {'TC*':>5} {'GR':>5} {'secs':>6}")
ratios = []
for n in (100, 150, 200, 250, 300):
    m = int(n * rng.uniform(1.5, 4))
    inst = gen_planted(n, m, k=n // 10, weighted=True, seed=int(rng.integers(2**32)))
    t = time.perf_counter()
    res = tight_cut_star(inst.graph, inst.weights, SolverConfig(n=3, N=20, seed=0))
    dt = time.perf_counter() - t
    gr = total_weight(inst.weights, greedy_removal(inst.graph))
    ratios.append(res.total_weight / inst.planted_optimum)
    print(f"{n:>4} {m:>5} {inst.planted_optimum:>5g} {res.total_weight:>5g} {gr:>5g} {dt:>6.2f}")

print("ratios", np.round(ratios, 3))
