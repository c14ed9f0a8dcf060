"""Shared fixtures-as-functions and independent oracles for the tests.

The reference implementations here are deliberately naive and separate
from the package code paths they check (dict/loop arithmetic instead of
incremental state or vectorized enumeration).
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from signedroman import ilp
from signedroman.domination import ProblemKind
from signedroman.graphs import Graph, generate_grid, generate_net, generate_random

# The six-vertex worked example.  The canonical fixture carries all nine
# edges; every published neighborhood sum and both optimal assignments
# (weights 2 and 4) hold on it.  The eight-edge variant drops {1, 5} and
# is kept for the values derived from its degree sequence.
EXAMPLE_EDGES_9 = [(0, 1), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5)]
EXAMPLE_EDGES_8 = [(0, 1), (0, 5), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4), (3, 5)]

EXAMPLE_OPT_SRDP = [-1, 2, -1, -1, 1, 2]   # weight 2
EXAMPLE_OPT_STRDP = [-1, 1, -1, 2, 1, 2]   # weight 4


def example_graph() -> Graph:
    return Graph.from_edges(6, EXAMPLE_EDGES_9)


def example_graph_8() -> Graph:
    return Graph.from_edges(6, EXAMPLE_EDGES_8)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def suite_graphs() -> list[tuple[str, Graph]]:
    """The benchmark family: 200 seeded random graphs with n in 4..12 and
    p cycling {0.2, 0.5, 0.8}, every grid up to 3x4, every net up to 3x3."""
    graphs = []
    for i in range(200):
        n = 4 + i % 9
        p = (0.2, 0.5, 0.8)[i % 3]
        seed = 10_000 + i
        graphs.append((f"random-{n}-{int(p * 100)}-s{seed}", generate_random(n, p, seed)))
    for rows in range(1, 4):
        for cols in range(1, 5):
            graphs.append((f"grid-{rows}x{cols}", generate_grid(rows, cols)))
    for rows in range(1, 4):
        for cols in range(1, 4):
            graphs.append((f"net-{rows}x{cols}", generate_net(rows, cols)))
    return graphs


# ---------------------------------------------------------------------------
# Independent reference implementations


def reference_feasible(g: Graph, z, kind: ProblemKind) -> bool:
    for i in range(g.n):
        if z[i] == -1 and not any(z[j] == 2 for j in g.adjacency[i]):
            return False
        s = sum(z[j] for j in g.adjacency[i])
        if kind is ProblemKind.SRDP:
            s += z[i]
        if s < 1:
            return False
    return True


def reference_optimum(g: Graph, kind: ProblemKind):
    """Plain-loop exhaustive minimum; None when infeasible."""
    best = None
    for z in itertools.product((-1, 1, 2), repeat=g.n):
        if reference_feasible(g, z, kind):
            w = sum(z)
            if best is None or w < best:
                best = w
    return best


def reference_penalty(g: Graph, z, kind: ProblemKind):
    """(f1, f2, f3, pen) computed with straight loops."""
    n = g.n
    f1 = sum(
        1
        for i in range(n)
        if z[i] == -1 and not any(z[j] == 2 for j in g.adjacency[i])
    )
    f2 = 0
    for i in range(n):
        s = sum(z[j] for j in g.adjacency[i])
        if kind is ProblemKind.SRDP:
            s += z[i]
        f2 += max(0, 1 - s)
    f3 = (sum(z) + n) / (3 * n) if n else 0.0
    pen = (1 + f1) * (1 + f2) - 1 + f3
    return f1, f2, f3, pen


def random_assignment(n: int, rng: random.Random) -> list[int]:
    return [rng.choice((-1, 1, 2)) for _ in range(n)]


# ---------------------------------------------------------------------------
# Relaxed-point sampling for the polyhedral tests


def feasible_encodings(g: Graph, kind: ProblemKind, formulation: str, limit: int = 64):
    """Encodings of feasible assignments, lexicographically first `limit`."""
    points = []
    for z in itertools.product((-1, 1, 2), repeat=g.n):
        if reference_feasible(g, z, kind):
            x, y = ilp.encode_assignment(z, formulation)
            points.append(np.array(x + y, dtype=float))
            if len(points) >= limit:
                break
    return points


def sample_relaxed_points(
    model: ilp.IlpModel,
    g: Graph,
    count: int,
    seed: int,
) -> np.ndarray:
    """`count` relaxed-feasible points of the model as a (count, 2n) array.

    Mix of rejection-sampled uniform points from [0,1]^(2n), deterministic
    vertices (encodings of feasible assignments), and random convex
    combinations of those encodings (always feasible for the relaxation,
    which keeps the sampler productive when uniform acceptance is poor).
    """
    rng = np.random.default_rng(seed)
    a, rhs, ge = ilp._constraint_arrays(model)

    def feasible_rows(pts: np.ndarray) -> np.ndarray:
        lhs = pts @ a.T
        ok = np.where(ge, lhs >= rhs - 1e-9, lhs <= rhs + 1e-9)
        return pts[ok.all(axis=1)]

    encodings = feasible_encodings(g, model.kind, model.formulation)
    if not encodings:
        raise ValueError("no feasible assignment to seed the sampler")
    base = np.array(encodings)
    collected = [base[: min(len(base), count)]]
    total = len(collected[0])
    attempts = 0
    while total < count and attempts < 200:
        attempts += 1
        uniform = rng.random((count, 2 * model.n))
        good = feasible_rows(uniform)
        if len(good):
            collected.append(good[: count - total])
            total += len(collected[-1])
        if total >= count:
            break
        # convex combinations of known-feasible points stay feasible
        k = min(len(base), 4)
        weights = rng.random((count - total, k))
        weights /= weights.sum(axis=1, keepdims=True)
        picks = base[rng.integers(0, len(base), size=(count - total, k))]
        combos = np.einsum("ij,ijk->ik", weights, picks)
        combos = feasible_rows(combos)  # guards against numerical drift
        collected.append(combos[: count - total])
        total += len(collected[-1])
    points = np.concatenate(collected, axis=0)[:count]
    if len(points) < count:
        raise ValueError(f"sampler produced {len(points)} of {count} points")
    return points
