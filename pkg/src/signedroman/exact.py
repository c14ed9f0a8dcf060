"""Exact optima: exhaustive enumeration and pruned branch-and-bound.

``brute_force`` enumerates all 3^n assignments (chunked and vectorized
with numpy) and is the ground-truth oracle for everything else in the
package.  ``branch_and_bound`` is an independent pure-Python depth-first
search over the same space with three pruning rules; on any instance both
can finish, the two agree.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .domination import ProblemKind, is_instance_feasible
from .graphs import Graph


class SolveStatus(Enum):
    OPTIMAL = "optimal"
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    TIMEOUT = "timeout"


@dataclass
class SolveResult:
    """Outcome of a solver run.

    ``counter`` is method-specific: assignments enumerated (brute force),
    search-tree nodes (branch and bound), or iterations (VNS).  When the
    status is optimal or feasible, ``best_assignment`` is feasible and its
    weight equals ``best_value``.
    """

    status: SolveStatus
    best_value: int | None = None
    best_assignment: list[int] | None = None
    counter: int = 0
    elapsed_ms: float = 0.0


_VALUE_TABLE = np.array([-1, 1, 2], dtype=np.int16)


def _assignment_chunk(n: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic enumeration of {-1,1,2}^n.

    Vertex 0 is the most significant digit and values are ordered
    -1 < 1 < 2, so row order is lexicographic in the assignment vector.
    """
    codes = np.arange(start, stop, dtype=np.int64)
    powers = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    digits = (codes[:, None] // powers[None, :]) % 3
    return _VALUE_TABLE[digits]


def brute_force(g: Graph, kind: ProblemKind, max_n: int = 15) -> SolveResult:
    """Exhaustive search over all 3^n assignments.

    Returns the minimum weight among feasible assignments (with the
    lexicographically smallest optimal assignment under vertex-index
    order), or infeasible status when nothing is feasible.
    """
    if g.n > max_n:
        raise ValueError(
            f"graph has {g.n} vertices; brute force is capped at max_n={max_n}"
        )
    t0 = time.perf_counter()
    n = g.n
    total = 3**n
    if n == 0:
        return SolveResult(
            SolveStatus.OPTIMAL, 0, [], counter=1,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
    adj_open = np.zeros((n, n), dtype=np.int16)
    for u, v in g.edges:
        adj_open[u, v] = 1
        adj_open[v, u] = 1
    adj_sum = adj_open.copy()
    if kind.uses_closed_neighborhood:
        adj_sum += np.eye(n, dtype=np.int16)

    best_w: int | None = None
    best_code = -1
    chunk = 3**10
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        z = _assignment_chunk(n, start, stop)
        sums = z @ adj_sum
        twos = (z == 2).astype(np.int16) @ adj_open
        guard_ok = ((z != -1) | (twos > 0)).all(axis=1)
        feasible = (sums >= 1).all(axis=1) & guard_ok
        if not feasible.any():
            continue
        weights = z.sum(axis=1, dtype=np.int32)
        masked = np.where(feasible, weights, np.int32(2 * n + 1))
        idx = int(np.argmin(masked))
        w = int(masked[idx])
        if best_w is None or w < best_w:
            best_w = w
            best_code = start + idx
    elapsed = (time.perf_counter() - t0) * 1e3
    if best_w is None:
        return SolveResult(SolveStatus.INFEASIBLE, counter=total, elapsed_ms=elapsed)
    best = [int(v) for v in _assignment_chunk(n, best_code, best_code + 1)[0]]
    return SolveResult(SolveStatus.OPTIMAL, best_w, best, counter=total, elapsed_ms=elapsed)


def branch_and_bound(
    g: Graph, kind: ProblemKind, time_limit: float | None = None
) -> SolveResult:
    """Depth-first branch and bound over {-1, 1, 2}^n.

    Vertices are branched in descending-degree order (ties by index) and
    values tried in the order -1, 1, 2.  Pruning rules:

    * objective bound: partial weight minus the number of unassigned
      vertices already meets the incumbent;
    * optimistic sums: even valuing every unassigned vertex 2 leaves some
      neighborhood sum below 1;
    * guard propagation: a -1 vertex has no remaining neighbor that is 2
      or still unassigned.

    With strict incumbent improvement the returned optimum is the first
    one met in search order, which makes repeated runs byte-identical.
    Hitting the time limit yields the incumbent (feasible status) or a
    timeout status when there is none.
    """
    t0 = time.perf_counter()
    deadline = None if time_limit is None else t0 + time_limit
    if not is_instance_feasible(g, kind):
        return SolveResult(
            SolveStatus.INFEASIBLE, counter=0,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
    n = g.n
    if n == 0:
        return SolveResult(
            SolveStatus.OPTIMAL, 0, [], counter=1,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
    adj = [list(g.adjacency[v]) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    closed = kind.uses_closed_neighborhood

    z = [0] * n  # 0 marks unassigned
    # optimistic sum: current value of the relevant neighborhood sum if
    # every unassigned vertex were set to 2
    opt_sum = [2 * (len(adj[v]) + (1 if closed else 0)) for v in range(n)]
    # count of neighbors that are 2 or still unassigned (guard potential)
    pot2 = [len(adj[v]) for v in range(n)]

    best_w: int | None = None
    best_z: list[int] | None = None
    nodes = 0
    timed_out = False

    def assign(v: int, val: int) -> bool:
        """Apply z[v] := val and report whether the subtree stays viable."""
        z[v] = val
        delta = val - 2
        ok = True
        if closed:
            opt_sum[v] += delta
            if opt_sum[v] < 1:
                ok = False
        for j in adj[v]:
            opt_sum[j] += delta
            if opt_sum[j] < 1:
                ok = False
        if val != 2:
            for j in adj[v]:
                pot2[j] -= 1
                if pot2[j] == 0 and z[j] == -1:
                    ok = False
        if val == -1 and pot2[v] == 0:
            ok = False
        return ok

    def undo(v: int, val: int) -> None:
        z[v] = 0
        delta = 2 - val
        if closed:
            opt_sum[v] += delta
        for j in adj[v]:
            opt_sum[j] += delta
        if val != 2:
            for j in adj[v]:
                pot2[j] += 1

    def search(depth: int, partial: int) -> None:
        nonlocal best_w, best_z, nodes, timed_out
        if timed_out:
            return
        if depth == n:
            # all incremental checks passed on the way down, so this leaf
            # is feasible
            if best_w is None or partial < best_w:
                best_w = partial
                best_z = list(z)
            return
        remaining = n - depth
        if best_w is not None and partial - remaining >= best_w:
            return
        v = order[depth]
        for val in (-1, 1, 2):
            nodes += 1
            if nodes % 4096 == 0 and deadline is not None:
                if time.perf_counter() > deadline:
                    timed_out = True
            viable = assign(v, val)
            if viable and not timed_out:
                search(depth + 1, partial + val)
            undo(v, val)
            if timed_out:
                return

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 200))
    try:
        search(0, 0)
    finally:
        sys.setrecursionlimit(old_limit)

    elapsed = (time.perf_counter() - t0) * 1e3
    if timed_out:
        if best_w is None:
            return SolveResult(SolveStatus.TIMEOUT, counter=nodes, elapsed_ms=elapsed)
        return SolveResult(
            SolveStatus.FEASIBLE, best_w, best_z, counter=nodes, elapsed_ms=elapsed
        )
    if best_w is None:
        return SolveResult(SolveStatus.INFEASIBLE, counter=nodes, elapsed_ms=elapsed)
    return SolveResult(SolveStatus.OPTIMAL, best_w, best_z, counter=nodes, elapsed_ms=elapsed)
