"""Seeded synthetic instance families.

All generators draw from ``numpy.random.default_rng(seed)`` and are pure
functions of their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GraphDomainError
from .graph import MultiDigraph

FAMILIES = ("erdos-renyi", "tournament", "perturbed-planar", "planted")


@dataclass(frozen=True)
class Instance:
    graph: MultiDigraph
    weights: dict[int, float]
    family: str
    seed: int
    planted_optimum: float | None = None
    params: dict = field(default_factory=dict)

    def sidecar(self) -> dict:
        """JSON-ready description (no graph)."""
        return {
            "family": self.family,
            "seed": self.seed,
            "params": dict(self.params),
            "plantedOptimum": self.planted_optimum,
        }


def _check_prob(p: float, name: str) -> None:
    if not 0.0 <= p <= 1.0:
        raise GraphDomainError(f"{name} must lie in [0, 1], got {p!r}")


def _check_count(n: int, name: str, low: int = 0) -> None:
    if int(n) != n or n < low:
        raise GraphDomainError(f"{name} must be an integer >= {low}, got {n!r}")


def _unit(m: int) -> dict[int, float]:
    return {a: 1.0 for a in range(m)}


def gen_erdos_renyi(n_vertices: int, p_arc: float, seed: int = 0) -> Instance:
    """Each ordered pair ``u != v`` gets an arc independently with probability ``p_arc``."""
    _check_count(n_vertices, "n_vertices")
    _check_prob(p_arc, "p_arc")
    rng = np.random.default_rng(seed)
    mask = rng.random((n_vertices, n_vertices)) < p_arc
    np.fill_diagonal(mask, False)
    us, vs = np.nonzero(mask)
    g = MultiDigraph(zip(us.tolist(), vs.tolist()), vertices=range(n_vertices))
    return Instance(g, _unit(g.n_arcs), "erdos-renyi", seed,
                    params={"n_vertices": n_vertices, "p_arc": p_arc})


def gen_tournament(n_vertices: int, seed: int = 0) -> Instance:
    """Orient every edge of ``K_n`` uniformly at random (``n(n-1)/2`` arcs)."""
    _check_count(n_vertices, "n_vertices", 1)
    rng = np.random.default_rng(seed)
    us, vs = np.triu_indices(n_vertices, k=1)
    flip = rng.random(len(us)) < 0.5
    tails = np.where(flip, vs, us).tolist()
    heads = np.where(flip, us, vs).tolist()
    g = MultiDigraph(zip(tails, heads), vertices=range(n_vertices))
    return Instance(g, _unit(g.n_arcs), "tournament", seed, params={"n_vertices": n_vertices})


def _triangulation(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Random maximal planar graph by repeated insertion into a uniform face."""
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2), (0, 1, 2)]  # inner and outer face of the seed triangle
    for v in range(3, n):
        i = int(rng.integers(len(faces)))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((a, c, v))
        edges.extend([(a, v), (b, v), (c, v)])
    return edges


def gen_perturbed_planar(n_vertices: int, rewire_fraction: float, seed: int = 0) -> Instance:
    """Randomly oriented maximal planar graph with ``floor(p |E|)`` arcs rewired.

    A rewired arc is removed and re-inserted between a uniformly random
    ordered pair that carries no arc yet; loops and parallel arcs are never
    created.
    """
    _check_count(n_vertices, "n_vertices", 3)
    _check_prob(rewire_fraction, "rewire_fraction")
    rng = np.random.default_rng(seed)
    edges = _triangulation(n_vertices, rng)
    flip = rng.random(len(edges)) < 0.5
    arcs = [(b, a) if f else (a, b) for (a, b), f in zip(edges, flip)]
    n_rewire = int(np.floor(rewire_fraction * len(arcs)))
    present = set(arcs)
    for idx in rng.choice(len(arcs), size=n_rewire, replace=False).tolist():
        present.discard(arcs[idx])
        while True:
            u, v = (int(x) for x in rng.integers(n_vertices, size=2))
            if u != v and (u, v) not in present:
                break
        arcs[idx] = (u, v)
        present.add((u, v))
    g = MultiDigraph(arcs, vertices=range(n_vertices))
    return Instance(g, _unit(g.n_arcs), "perturbed-planar", seed,
                    params={"n_vertices": n_vertices, "rewire_fraction": rewire_fraction,
                            "rewired": n_rewire})


def gen_planted(n_vertices: int, n_arcs: int, k: int, weighted: bool = False,
                seed: int = 0, max_cycle_len: int = 6) -> Instance:
    """Instance with known minimum feedback arc length.

    A random vertex order is fixed and ``k`` vertex-disjoint forward paths
    are each closed by one backward arc; every other arc points forward.
    Deleting the ``k`` backward arcs leaves a DAG, and the certificate
    cycles are arc-disjoint, so the optimum is ``k`` (or the backward arcs'
    total weight).  With ``weighted=True`` weights are integers in 1..10;
    the forward arcs of a certificate cycle never weigh less than its
    backward arc, which keeps the backward arc optimal per cycle.
    """
    _check_count(n_vertices, "n_vertices")
    _check_count(n_arcs, "n_arcs")
    _check_count(k, "k", 1)
    if 2 * k > n_vertices:
        raise GraphDomainError(f"k={k} certificate cycles need at least {2 * k} vertices")
    if 2 * k > n_arcs:
        raise GraphDomainError(f"k={k} certificate cycles need at least {2 * k} arcs")
    rng = np.random.default_rng(seed)
    order = rng.permutation(n_vertices).tolist()

    top = max(2, min(max_cycle_len, n_vertices // k, n_arcs // k))
    sizes = rng.integers(2, top + 1, size=k).tolist()
    while sum(sizes) > n_arcs:
        sizes[sizes.index(max(sizes))] -= 1
    n_dag = n_arcs - sum(sizes)
    if n_dag > n_vertices * (n_vertices - 1) // 2 - sum(s - 1 for s in sizes):
        raise GraphDomainError("too many arcs for a simple forward DAG")

    slots = sorted(rng.choice(n_vertices, size=sum(sizes), replace=False).tolist())
    rng.shuffle(slots)
    pos = {v: i for i, v in enumerate(order)}
    forward: set[tuple[int, int]] = set()
    arcs: list[tuple[int, int]] = []
    kinds: list[tuple[str, int]] = []  # ("back" | "cert" | "dag", certificate index)
    at = 0
    for ci, s in enumerate(sizes):
        group = sorted(slots[at:at + s])
        at += s
        path = [order[p] for p in group]
        for u, v in zip(path, path[1:]):
            arcs.append((u, v))
            forward.add((u, v))
            kinds.append(("cert", ci))
        arcs.append((path[-1], path[0]))
        kinds.append(("back", ci))
    while len(arcs) < n_arcs:
        u, v = (int(x) for x in rng.integers(n_vertices, size=2))
        if u == v:
            continue
        if pos[u] > pos[v]:
            u, v = v, u
        if (u, v) in forward:
            continue
        forward.add((u, v))
        arcs.append((u, v))
        kinds.append(("dag", -1))

    perm = rng.permutation(len(arcs)).tolist()
    arcs = [arcs[i] for i in perm]
    kinds = [kinds[i] for i in perm]
    if weighted:
        back_w: dict[int, int] = {}
        for kind, ci in kinds:
            if kind == "back":
                back_w[ci] = int(rng.integers(1, 11))
        weights = {}
        for a, (kind, ci) in enumerate(kinds):
            if kind == "back":
                weights[a] = float(back_w[ci])
            elif kind == "cert":
                weights[a] = float(rng.integers(back_w[ci], 11))
            else:
                weights[a] = float(rng.integers(1, 11))
        optimum = float(sum(back_w.values()))
    else:
        weights = _unit(len(arcs))
        optimum = float(k)
    g = MultiDigraph(arcs, vertices=range(n_vertices))
    return Instance(g, weights, "planted", seed, planted_optimum=optimum,
                    params={"n_vertices": n_vertices, "n_arcs": n_arcs, "k": k,
                            "weighted": weighted})
