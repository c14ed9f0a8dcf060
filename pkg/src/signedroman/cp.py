"""Constraint-programming model over the value variables z_i directly.

Per vertex the model carries one domain declaration z_i in {-1, 1, 2},
one guard disjunction (z_i != -1) or (z_j = 2 for some neighbor j), and
one neighborhood-sum clause requiring the sum to be strictly positive
over the integers (equivalent to >= 1, which is how the text emitter
writes it).  The objective minimizes the sum of all z_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import VALUES, ProblemKind
from .graphs import Graph


@dataclass(frozen=True)
class CpModel:
    """One guard clause and one sum clause per vertex.

    ``guards[i]`` lists the neighbors eligible to take value 2 in vertex
    i's guard disjunction; ``sums[i]`` lists the vertices whose values are
    summed for vertex i (N[i] for SRDP, N(i) for STRDP).
    """

    n: int
    kind: ProblemKind
    guards: tuple[tuple[int, ...], ...]
    sums: tuple[tuple[int, ...], ...]
    domain: tuple[int, ...] = VALUES


def build_cp(g: Graph, kind: ProblemKind) -> CpModel:
    guards = tuple(g.adjacency[i] for i in range(g.n))
    if kind.uses_closed_neighborhood:
        sums = tuple(tuple(sorted((*g.adjacency[i], i))) for i in range(g.n))
    else:
        sums = tuple(g.adjacency[i] for i in range(g.n))
    return CpModel(n=g.n, kind=kind, guards=guards, sums=sums)


def cp_satisfies(model: CpModel, z) -> bool:
    """Evaluate an assignment against every clause of the model."""
    if len(z) != model.n:
        raise ValueError(f"assignment length {len(z)} != {model.n}")
    for v in z:
        if v not in model.domain:
            return False
    for i in range(model.n):
        if z[i] == -1 and not any(z[j] == 2 for j in model.guards[i]):
            return False
        if sum(z[j] for j in model.sums[i]) <= 0:
            return False
    return True


def emit_cp(model: CpModel) -> str:
    """Deterministic text form: n domain lines, n guard lines, n sum
    lines, one minimize line.

    Sum clauses are written as ``>= 1``; over the integer domain this is
    the same requirement as strict positivity.  An empty sum is written as
    the literal 0 (and is therefore unsatisfiable).
    """
    lines = []
    for i in range(model.n):
        domain = ",".join(str(v) for v in model.domain)
        lines.append(f"var z{i} in {{{domain}}}")
    for i in range(model.n):
        clause = f"guard {i} : z{i} != -1"
        for j in model.guards[i]:
            clause += f" or z{j} == 2"
        lines.append(clause)
    for i in range(model.n):
        body = " + ".join(f"z{j}" for j in model.sums[i]) or "0"
        lines.append(f"sum {i} : {body} >= 1")
    lines.append("minimize " + (" + ".join(f"z{i}" for i in range(model.n)) or "0"))
    return "\n".join(lines) + "\n"
