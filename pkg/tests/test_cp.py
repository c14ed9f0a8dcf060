from __future__ import annotations

import itertools

import helpers
from signedroman.cp import CpModel, build_cp, cp_satisfies, emit_cp
from signedroman.domination import ProblemKind, is_feasible
from signedroman.exact import brute_force
from signedroman.graphs import Graph, generate_random

SRDP = ProblemKind.SRDP
STRDP = ProblemKind.STRDP


def _cp_optimum(model: CpModel):
    best = None
    for z in itertools.product((-1, 1, 2), repeat=model.n):
        if cp_satisfies(model, z):
            w = sum(z)
            if best is None or w < best:
                best = w
    return best


def test_structure(example):
    for kind in (SRDP, STRDP):
        m = build_cp(example, kind)
        assert len(m.guards) == m.n == 6
        assert len(m.sums) == 6
        assert m.domain == (-1, 1, 2)
    srdp = build_cp(example, SRDP)
    strdp = build_cp(example, STRDP)
    for i in range(6):
        assert i in srdp.sums[i]       # closed neighborhood includes self
        assert i not in strdp.sums[i]  # open neighborhood does not


def test_worked_example_optima(example):
    assert _cp_optimum(build_cp(example, SRDP)) == 2
    assert _cp_optimum(build_cp(example, STRDP)) == 4


def test_k1():
    k1 = Graph.from_edges(1, [])
    assert _cp_optimum(build_cp(k1, SRDP)) == 1
    assert _cp_optimum(build_cp(k1, STRDP)) is None


def test_cp_matches_direct_semantics():
    # the strict > 0 sum over integers is the >= 1 condition
    graphs = [
        helpers.complete_graph(2),
        helpers.path_graph(4),
        Graph.from_edges(3, [(0, 1)]),
        generate_random(6, 0.4, 8),
    ]
    for g in graphs:
        for kind in (SRDP, STRDP):
            model = build_cp(g, kind)
            for z in itertools.product((-1, 1, 2), repeat=g.n):
                assert cp_satisfies(model, z) == is_feasible(g, list(z), kind)
            reference = brute_force(g, kind)
            assert _cp_optimum(model) == reference.best_value


def test_emission_line_counts(example):
    for kind in (SRDP, STRDP):
        text = emit_cp(build_cp(example, kind))
        lines = text.splitlines()
        assert len(lines) == 3 * 6 + 1
        assert sum(1 for l in lines if l.startswith("var ")) == 6
        assert sum(1 for l in lines if l.startswith("guard ")) == 6
        assert sum(1 for l in lines if l.startswith("sum ")) == 6
        assert lines[-1].startswith("minimize ")


def test_emission_golden_k2():
    text = emit_cp(build_cp(helpers.complete_graph(2), SRDP))
    assert text == (
        "var z0 in {-1,1,2}\n"
        "var z1 in {-1,1,2}\n"
        "guard 0 : z0 != -1 or z1 == 2\n"
        "guard 1 : z1 != -1 or z0 == 2\n"
        "sum 0 : z0 + z1 >= 1\n"
        "sum 1 : z0 + z1 >= 1\n"
        "minimize z0 + z1\n"
    )


def test_emission_isolated_vertex():
    g = Graph.from_edges(2, [])
    text = emit_cp(build_cp(g, STRDP))
    assert "guard 0 : z0 != -1\n" in text
    assert "sum 0 : 0 >= 1" in text  # empty sum, unsatisfiable


def test_emission_deterministic(example):
    m = build_cp(example, STRDP)
    assert emit_cp(m) == emit_cp(m)
