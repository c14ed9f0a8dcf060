from __future__ import annotations

import random

import pytest

import helpers
from signedroman.domination import (
    ProblemKind,
    check_assignment,
    format_assignment,
    guard_condition_holds,
    is_feasible,
    is_instance_feasible,
    neighborhood_sum,
    parse_assignment,
    weight,
)
from signedroman.graphs import Graph, generate_random

SRDP = ProblemKind.SRDP
STRDP = ProblemKind.STRDP


def test_closed_sums_of_srdp_optimum(example):
    z = helpers.EXAMPLE_OPT_SRDP
    expected = {0: 3, 1: 3, 2: 1, 3: 1, 4: 1, 5: 2}
    for vertex, value in expected.items():
        assert neighborhood_sum(example, z, vertex, SRDP) == value


def test_open_sums_of_strdp_optimum(example):
    z = helpers.EXAMPLE_OPT_STRDP
    expected = {0: 3, 1: 1, 2: 4, 3: 2, 4: 2, 5: 2}
    for vertex, value in expected.items():
        assert neighborhood_sum(example, z, vertex, STRDP) == value


def test_open_sum_of_isolated_vertex_is_zero():
    g = Graph.from_edges(3, [(0, 1)])
    assert neighborhood_sum(g, [2, 2, 2], 2, STRDP) == 0
    assert neighborhood_sum(g, [2, 2, 2], 2, SRDP) == 2


def test_guard_condition(example):
    z = helpers.EXAMPLE_OPT_SRDP
    assert guard_condition_holds(example, z, 0)  # -1 next to the 2 at vertex 1
    assert guard_condition_holds(example, z, 4)  # value 1, vacuous
    k2 = Graph.from_edges(2, [(0, 1)])
    assert not guard_condition_holds(k2, [-1, 1], 0)
    assert guard_condition_holds(k2, [-1, 2], 0)


def test_feasibility_of_worked_example(example):
    assert is_feasible(example, helpers.EXAMPLE_OPT_SRDP, SRDP)
    assert is_feasible(example, helpers.EXAMPLE_OPT_STRDP, STRDP)
    # the SRDP optimum is not totally dominating
    assert not is_feasible(example, helpers.EXAMPLE_OPT_SRDP, STRDP)


def test_all_twos_feasible_without_isolated_vertices():
    for g in (helpers.example_graph(), helpers.complete_graph(4), helpers.path_graph(5)):
        all_two = [2] * g.n
        assert is_feasible(g, all_two, SRDP)
        assert is_feasible(g, all_two, STRDP)


def test_all_twos_strdp_iff_min_degree_positive():
    rng = random.Random(4)
    for _ in range(25):
        g = generate_random(rng.randrange(1, 10), rng.random(), rng.randrange(500))
        assert is_feasible(g, [2] * g.n, STRDP) == (g.min_degree() >= 1)


def test_feasibility_is_monotone():
    # bumping values one ladder step up never breaks feasibility
    ladder_up = {-1: 1, 1: 2, 2: 2}
    rng = random.Random(9)
    checked = 0
    while checked < 40:
        g = generate_random(rng.randrange(2, 9), rng.random(), rng.randrange(1000))
        kind = rng.choice((SRDP, STRDP))
        z = helpers.random_assignment(g.n, rng)
        if not is_feasible(g, z, kind):
            continue
        checked += 1
        bumped = [ladder_up[v] if rng.random() < 0.4 else v for v in z]
        assert is_feasible(g, bumped, kind)


def test_weight_examples(example):
    assert weight(helpers.EXAMPLE_OPT_SRDP) == 2
    assert weight(helpers.EXAMPLE_OPT_STRDP) == 4
    assert weight([-1] * 6) == -6


def test_weight_extremes():
    for n in (1, 5, 12):
        assert weight([-1] * n) == -n
        assert weight([2] * n) == 2 * n


def test_instance_feasibility():
    k1 = Graph.from_edges(1, [])
    assert is_instance_feasible(k1, SRDP)
    assert not is_instance_feasible(k1, STRDP)
    k2 = Graph.from_edges(2, [(0, 1)])
    assert is_instance_feasible(k2, STRDP)
    with_isolated = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert is_instance_feasible(with_isolated, SRDP)
    assert not is_instance_feasible(with_isolated, STRDP)


def test_check_assignment_rejects_malformed(example):
    with pytest.raises(ValueError):
        check_assignment(example, [1, 1, 1])
    with pytest.raises(ValueError):
        check_assignment(example, [0, 1, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        is_feasible(example, [3, 1, 1, 1, 1, 1], SRDP)


def test_assignment_text_round_trip():
    z = [-1, 2, -1, -1, 1, 2]
    assert parse_assignment(format_assignment(z), 6) == z
    assert format_assignment(z) == "-1 2 -1 -1 1 2"


def test_parse_assignment_errors():
    with pytest.raises(ValueError):
        parse_assignment("1 2", 3)
    with pytest.raises(ValueError):
        parse_assignment("1 2 0", 3)
    with pytest.raises(ValueError):
        parse_assignment("1 two 2", 3)
