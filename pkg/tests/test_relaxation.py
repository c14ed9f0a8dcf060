from __future__ import annotations

import numpy as np
import pytest

import helpers
from signedroman import ilp
from signedroman.domination import ProblemKind
from signedroman.graphs import generate_random
from signedroman.ilp import (
    RelaxedPoint,
    build_bvv,
    build_rr,
    check_point,
    map_bvv_to_rr,
    map_rr_to_bvv,
    relaxed_objective,
)

SRDP = ProblemKind.SRDP
STRDP = ProblemKind.STRDP


def _point(x, y, tag):
    return RelaxedPoint(tuple(float(v) for v in x), tuple(float(v) for v in y), tag)


def test_substitution_arithmetic(example):
    bvv = build_bvv(example, SRDP)
    # encoding of value 2 in bvv is (0, 1) per coordinate; its image is (1, 1)
    x, y = ilp.encode_assignment([2] * 6, "bvv")
    image = map_bvv_to_rr(_point(x, y, "bvv"), bvv)
    assert image.formulation == "rr"
    assert image.x == (1.0,) * 6 and image.y == (1.0,) * 6


def test_fractional_substitution(example):
    bvv = build_bvv(example, SRDP)
    p = _point([0.5] * 6, [0.25] * 6, "bvv")
    assert check_point(bvv, p.x, p.y, integral=False).ok
    q = map_bvv_to_rr(p, bvv)
    assert q.x == (0.75,) * 6 and q.y == (0.25,) * 6


def test_round_trip_identity(example):
    rr = build_rr(example, STRDP)
    bvv = build_bvv(example, STRDP)
    pts = helpers.sample_relaxed_points(bvv, example, 50, seed=5)
    for row in pts:
        p = _point(row[:6], row[6:], "bvv")
        q = map_bvv_to_rr(p, bvv)
        back = map_rr_to_bvv(q, rr)
        assert max(
            abs(a - b) for a, b in zip(back.x + back.y, p.x + p.y)
        ) <= 1e-12


def test_mapped_points_feasible_with_equal_objective(example):
    for kind in (SRDP, STRDP):
        rr = build_rr(example, kind)
        bvv = build_bvv(example, kind)
        for source, target, mapper, src_model, dst_model in (
            ("bvv", "rr", map_bvv_to_rr, bvv, rr),
            ("rr", "bvv", map_rr_to_bvv, rr, bvv),
        ):
            pts = helpers.sample_relaxed_points(src_model, example, 100, seed=11)
            for row in pts:
                p = _point(row[:6], row[6:], source)
                q = mapper(p, src_model)
                report = check_point(dst_model, q.x, q.y, integral=False)
                assert report.ok
                assert abs(
                    relaxed_objective(src_model, p) - relaxed_objective(dst_model, q)
                ) <= 1e-12


def test_map_rejects_infeasible_input(example):
    bvv = build_bvv(example, SRDP)
    with pytest.raises(ValueError, match="infeasible"):
        map_bvv_to_rr(_point([0.0] * 6, [0.0] * 6, "bvv"), bvv)


def test_map_rejects_wrong_tag(example):
    bvv = build_bvv(example, SRDP)
    rr = build_rr(example, SRDP)
    x, y = ilp.encode_assignment(helpers.EXAMPLE_OPT_SRDP, "rr")
    p = _point(x, y, "rr")
    with pytest.raises(ValueError):
        map_bvv_to_rr(p, bvv)
    with pytest.raises(ValueError):
        map_rr_to_bvv(p, bvv)  # model/point formulation mismatch


def test_relaxed_point_validates_box():
    with pytest.raises(ValueError):
        RelaxedPoint((1.5,), (0.0,), "rr")
    with pytest.raises(ValueError):
        RelaxedPoint((0.5,), (-0.2,), "bvv")
    with pytest.raises(ValueError):
        RelaxedPoint((0.5,), (0.5,), "nope")


def test_sampler_yields_requested_count():
    g = generate_random(6, 0.5, 9)
    for kind in (SRDP, STRDP):
        for formulation in ("rr", "bvv"):
            model = ilp.build_model(g, kind, formulation)
            pts = helpers.sample_relaxed_points(model, g, 200, seed=3)
            assert pts.shape == (200, 12)
            a, rhs, ge = ilp._constraint_arrays(model)
            lhs = pts @ a.T
            ok = np.where(ge, lhs >= rhs - 1e-9, lhs <= rhs + 1e-9)
            assert ok.all()
