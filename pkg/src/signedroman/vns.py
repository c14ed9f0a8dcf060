"""Variable neighborhood search with a multiplicative infeasibility penalty.

Solutions are value vectors over {-1, 1, 2}.  Quality is compared through

    pen(z) = (1 + f1(z)) * (1 + f2(z)) - 1 + f3(z)

where f1 counts guard violations (-1 vertices without a 2-neighbor), f2
sums the clamped neighborhood-sum deficiencies max(0, 1 - s(i)), and
f3 = (weight(z) + n) / (3n) scales the objective into [0, 1].  Feasible
solutions therefore have pen = f3 in [0, 1], infeasible ones have
pen >= 1, and among feasible solutions the pen order equals the weight
order.  Slightly infeasible intermediates stay comparable instead of
being discarded outright.

All pen comparisons use the exact integer 3n * ((1+f1)(1+f2) - 1) +
weight + n, so runs are deterministic for a fixed seed; every stochastic
choice draws from one seeded Mersenne Twister in a fixed order
(initialization: vertex then value per step; shaking: increment vertex
then decrement vertex per pair; movement: one coin per equal-pen
candidate).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .domination import ProblemKind, check_assignment, is_instance_feasible
from .exact import SolveResult, SolveStatus
from .graphs import Graph

_VALUES = (-1, 1, 2)


@dataclass
class VnsParams:
    kind: ProblemKind
    k_min: int = 2
    k_max: int = 30
    it_max: int = 50_000
    prob: float = 0.5
    seed: int = 0
    time_limit: float | None = None

    def __post_init__(self):
        if self.k_min < 1 or self.k_max < self.k_min:
            raise ValueError(f"need 1 <= k_min <= k_max, got ({self.k_min}, {self.k_max})")
        if not 0.0 <= self.prob <= 1.0:
            raise ValueError(f"prob {self.prob} outside [0, 1]")
        if self.it_max < 1:
            raise ValueError(f"it_max must be >= 1, got {self.it_max}")


@dataclass(frozen=True)
class PenaltyBreakdown:
    f1: int
    f2: int
    f3: float
    pen: float

    @property
    def feasible(self) -> bool:
        return self.f1 == 0 and self.f2 == 0


class _SearchState:
    """Mutable assignment with incrementally maintained penalty terms.

    Keeps per-vertex neighborhood sums and 2-neighbor counts so that one
    value change costs O(deg) instead of a full recomputation.
    """

    __slots__ = ("g", "kind", "closed", "z", "s", "twos", "f1", "f2", "weight", "n")

    def __init__(self, g: Graph, kind: ProblemKind, z):
        self.g = g
        self.kind = kind
        self.closed = kind.uses_closed_neighborhood
        self.n = g.n
        self.z = list(z)
        self.s = []
        for i in range(g.n):
            s = sum(self.z[j] for j in g.adjacency[i])
            if self.closed:
                s += self.z[i]
            self.s.append(s)
        self.twos = [sum(1 for j in g.adjacency[i] if self.z[j] == 2) for i in range(g.n)]
        self.f1 = sum(
            1 for i in range(g.n) if self.z[i] == -1 and self.twos[i] == 0
        )
        self.f2 = sum(max(0, 1 - s) for s in self.s)
        self.weight = sum(self.z)

    def _bump_sum(self, i: int, delta: int) -> None:
        old = self.s[i]
        new = old + delta
        self.s[i] = new
        self.f2 += max(0, 1 - new) - max(0, 1 - old)

    def set_value(self, v: int, val: int) -> None:
        old = self.z[v]
        if old == val:
            return
        adj = self.g.adjacency[v]
        if old == -1 and self.twos[v] == 0:
            self.f1 -= 1
        self.weight += val - old
        delta = val - old
        for j in adj:
            self._bump_sum(j, delta)
        if self.closed:
            self._bump_sum(v, delta)
        if old == 2:
            for j in adj:
                self.twos[j] -= 1
                if self.twos[j] == 0 and self.z[j] == -1:
                    self.f1 += 1
        elif val == 2:
            for j in adj:
                if self.twos[j] == 0 and self.z[j] == -1:
                    self.f1 -= 1
                self.twos[j] += 1
        self.z[v] = val
        if val == -1 and self.twos[v] == 0:
            self.f1 += 1

    @property
    def feasible(self) -> bool:
        return self.f1 == 0 and self.f2 == 0

    @property
    def pen_scaled(self) -> int:
        """3n * ((1+f1)(1+f2) - 1) + weight + n; same order as pen, exact."""
        core = (1 + self.f1) * (1 + self.f2) - 1
        return 3 * self.n * core + self.weight + self.n

    def breakdown(self) -> PenaltyBreakdown:
        f3 = (self.weight + self.n) / (3 * self.n) if self.n else 0.0
        core = (1 + self.f1) * (1 + self.f2) - 1
        return PenaltyBreakdown(self.f1, self.f2, f3, core + f3)


def penalty(g: Graph, z, kind: ProblemKind) -> PenaltyBreakdown:
    """Penalty terms of an assignment, computed fresh."""
    check_assignment(g, z)
    return _SearchState(g, kind, z).breakdown()


def improvement_probing(g: Graph, z, kind: ProblemKind) -> list[int]:
    """Greedy single-step decrements (2 -> 1, 1 -> -1) that keep the
    solution feasible.  Vertices are visited in index order, each stepped
    down as far as feasibility allows, with passes repeated until one
    changes nothing.  Never increases the weight."""
    state = _SearchState(g, kind, z)
    if not state.feasible:
        raise ValueError("improvement probing requires a feasible assignment")
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            while state.z[v] != -1:
                cur = state.z[v]
                state.set_value(v, 1 if cur == 2 else -1)
                if state.feasible:
                    changed = True
                else:
                    state.set_value(v, cur)
                    break
    return list(state.z)


def initialize(g: Graph, kind: ProblemKind, rng: random.Random) -> list[int]:
    """Random construction: starting from the all-unset vector, assign a
    random value to a random vertex (reassignment allowed) until every
    vertex is set and the result is feasible, then apply improvement
    probing.  Unset vertices contribute nothing to sums and are exempt
    from the guard condition, so feasibility is only tested once the
    vector is complete."""
    if not is_instance_feasible(g, kind):
        raise ValueError(f"no feasible assignment exists for this {kind.value} instance")
    n = g.n
    if n == 0:
        return []
    z = [0] * n
    unset = n
    while unset > 0:
        v = rng.randrange(n)
        val = rng.choice(_VALUES)
        if z[v] == 0:
            unset -= 1
        z[v] = val
    state = _SearchState(g, kind, z)
    while not state.feasible:
        v = rng.randrange(n)
        val = rng.choice(_VALUES)
        state.set_value(v, val)
    return improvement_probing(g, state.z, kind)


def shake(g: Graph, z, k: int, kind: ProblemKind, rng: random.Random) -> list[int]:
    """Perturb with up to k paired ladder moves: per pair, one random
    vertex with value below 2 is incremented one step and a distinct
    random vertex with value above -1 is decremented one step.  Stops
    early when no valid pair exists.  A feasible result gets improvement
    probing applied."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    zz = list(z)
    n = g.n
    for _ in range(k):
        positive = sum(1 for val in zz if val > -1)
        inc_candidates = [
            u for u in range(n)
            if zz[u] < 2 and positive - (1 if zz[u] > -1 else 0) >= 1
        ]
        if not inc_candidates:
            break
        u = rng.choice(inc_candidates)
        dec_candidates = [v for v in range(n) if v != u and zz[v] > -1]
        v = rng.choice(dec_candidates)
        zz[u] = 1 if zz[u] == -1 else 2
        zz[v] = 1 if zz[v] == 2 else -1
    state = _SearchState(g, kind, zz)
    if state.feasible:
        return improvement_probing(g, zz, kind)
    return zz


def local_search(
    g: Graph,
    z,
    kind: ProblemKind,
    on_move: Callable[[list[int], PenaltyBreakdown], None] | None = None,
) -> list[int]:
    """1-swap first-improvement local search on the penalty.

    Scans positively valued vertices in index order; for each, tentatively
    steps the vertex down one ladder step, finds the best single-step
    increment among the other vertices (ties to the smallest index), and
    applies the pair when it lowers pen strictly, restarting the scan.
    Candidate evaluation reuses the incrementally maintained penalty, so
    probing one swap costs O(deg) rather than a recomputation.
    """
    state = _SearchState(g, kind, z)
    n = g.n
    improved = True
    while improved:
        improved = False
        for u in range(n):
            cu = state.z[u]
            if cu == -1:
                continue
            base = state.pen_scaled
            state.set_value(u, 1 if cu == 2 else -1)
            best_pen = None
            best_v = -1
            best_val = 0
            for v in range(n):
                if v == u:
                    continue
                cv = state.z[v]
                if cv == 2:
                    continue
                up = 1 if cv == -1 else 2
                state.set_value(v, up)
                cand = state.pen_scaled
                if best_pen is None or cand < best_pen:
                    best_pen, best_v, best_val = cand, v, up
                state.set_value(v, cv)
            if best_pen is not None and best_pen < base:
                state.set_value(best_v, best_val)
                if on_move is not None:
                    on_move(list(state.z), state.breakdown())
                improved = True
                break
            state.set_value(u, cu)
    return list(state.z)


def run_vns(
    g: Graph,
    params: VnsParams,
    trace_sink: Callable[[str], None] | None = None,
) -> SolveResult:
    """Shake / local-search / move loop over neighborhoods k_min..k_max.

    The candidate replaces the current solution when its pen is strictly
    lower, or on a coin flip below ``prob`` when exactly equal.  On strict
    improvement k resets to k_min, otherwise it advances and wraps.  The
    best feasible solution seen is returned with feasible status (this
    heuristic never claims optimality on its own); infeasible instances
    are reported as such.  Neighborhood sizes are capped at n since a
    shake pairs distinct vertices.

    ``trace_sink`` receives one CSV line ``iter,k,pen,weight,feasible,moved``
    per iteration describing the candidate and the movement decision.
    """
    t0 = time.perf_counter()
    deadline = None if params.time_limit is None else t0 + params.time_limit
    kind = params.kind
    if not is_instance_feasible(g, kind):
        return SolveResult(
            SolveStatus.INFEASIBLE, counter=0,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
    if g.n == 0:
        return SolveResult(
            SolveStatus.FEASIBLE, 0, [], counter=0,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
    rng = random.Random(params.seed)
    k_max = min(params.k_max, g.n)
    k_min = min(params.k_min, k_max)

    current = initialize(g, kind, rng)
    cur_state = _SearchState(g, kind, current)
    cur_pen = cur_state.pen_scaled
    best = list(current)
    best_weight = cur_state.weight

    k = k_min
    iterations = 0
    for it in range(1, params.it_max + 1):
        if deadline is not None and time.perf_counter() > deadline:
            break
        iterations = it
        k_used = k
        candidate = shake(g, current, k, kind, rng)
        candidate = local_search(g, candidate, kind)
        cand_state = _SearchState(g, kind, candidate)
        cand_pen = cand_state.pen_scaled
        moved = False
        if cand_pen < cur_pen:
            current, cur_pen = candidate, cand_pen
            moved = True
            k = k_min
        else:
            if cand_pen == cur_pen and rng.random() < params.prob:
                current = candidate
                moved = True
            k = k_min if k + 1 > k_max else k + 1
        if cand_state.feasible and cand_state.weight < best_weight:
            best = list(candidate)
            best_weight = cand_state.weight
        if trace_sink is not None:
            b = cand_state.breakdown()
            trace_sink(
                f"{it},{k_used},{b.pen:.12g},{cand_state.weight},"
                f"{int(cand_state.feasible)},{int(moved)}"
            )
    return SolveResult(
        SolveStatus.FEASIBLE,
        best_weight,
        best,
        counter=iterations,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )
