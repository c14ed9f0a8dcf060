"""Semantics of signed Roman domination (SRDP) and its total variant (STRDP).

An assignment gives every vertex a value from {-1, 1, 2}.  It is feasible
when every vertex's neighborhood sum is at least 1 (closed neighborhood
N[i] for SRDP, open neighborhood N(i) for STRDP) and every -1 vertex has a
neighbor valued 2 (the guard condition).  The weight of an assignment is
the sum of its values; the domination number is the minimum weight over
feasible assignments.
"""

from __future__ import annotations

from enum import Enum

from .graphs import Graph

VALUES = (-1, 1, 2)


class ProblemKind(Enum):
    SRDP = "srdp"
    STRDP = "strdp"

    @property
    def uses_closed_neighborhood(self) -> bool:
        return self is ProblemKind.SRDP


def check_assignment(g: Graph, z) -> None:
    """Raise ValueError unless z is a length-n vector over {-1, 1, 2}."""
    if len(z) != g.n:
        raise ValueError(f"assignment length {len(z)} != vertex count {g.n}")
    for i, v in enumerate(z):
        if v not in VALUES:
            raise ValueError(f"assignment value {v!r} at vertex {i} not in {VALUES}")


def neighborhood_sum(g: Graph, z, i: int, kind: ProblemKind) -> int:
    """Sum of assigned values over N[i] (SRDP) or N(i) (STRDP)."""
    s = sum(z[j] for j in g.adjacency[i])
    if kind.uses_closed_neighborhood:
        s += z[i]
    return s


def guard_condition_holds(g: Graph, z, i: int) -> bool:
    """True iff z[i] != -1 or some neighbor of i is valued 2."""
    if z[i] != -1:
        return True
    return any(z[j] == 2 for j in g.adjacency[i])


def is_feasible(g: Graph, z, kind: ProblemKind) -> bool:
    """Full feasibility check: guard condition and neighborhood sums."""
    check_assignment(g, z)
    for i in range(g.n):
        if not guard_condition_holds(g, z, i):
            return False
        if neighborhood_sum(g, z, i, kind) < 1:
            return False
    return True


def weight(z) -> int:
    return sum(z)


def is_instance_feasible(g: Graph, kind: ProblemKind) -> bool:
    """Whether any feasible assignment exists.

    SRDP instances always admit the all-2 assignment.  The constraints are
    monotone nondecreasing in the values, so STRDP is feasible iff all-2
    is, i.e. iff the graph has no isolated vertex.
    """
    if kind.uses_closed_neighborhood:
        return True
    return not g.has_isolated_vertex()


def parse_assignment(text: str, n: int) -> list[int]:
    """Parse one line of n space-separated values from {-1, 1, 2}."""
    tokens = text.split()
    if len(tokens) != n:
        raise ValueError(f"expected {n} values, got {len(tokens)}")
    values = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"non-integer assignment value {tok!r}") from None
        if v not in VALUES:
            raise ValueError(f"assignment value {v} not in {VALUES}")
        values.append(v)
    return values


def format_assignment(z) -> str:
    return " ".join(str(v) for v in z)
