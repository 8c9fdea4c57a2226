import logging
import math
from fractions import Fraction as F

import pytest

from generator import corpus
from models import DrawConfig, Gate, Pt, Rect, Subdivision
from simdraw.engine import (
    apply_stretch,
    base_case,
    check_step,
    compute_stretch,
    induction_step,
    open_notch,
    place_gates,
    place_step_vertices,
    resolve_nondiverging,
    run,
)
from simdraw.errors import ConstructionError, PoleNameError
from simdraw.stgraph import build_face_plan, build_red, subgraph_sequence
from simdraw.subdivision import adjacencies, augment_boundary, derive_primal
from simdraw.verify import verify
from storage import dumps_drawing


def test_base_case_stacks_three_boxes():
    state = base_case()
    assert state.stack == ["v_S", "v_W", "v_N"]
    assert state.rects["v_W"].as_tuple() == (0, 1, 1, 2)
    assert state.positions["v_N"] == Pt(F(1, 2), F(5, 2))
    assert state.right_edge == 1


def test_first_step_on_pin5(pin5):
    graph = derive_primal(augment_boundary(pin5))
    faces = next(subgraph_sequence(build_face_plan(build_red(graph))))
    state = base_case()
    plan = induction_step(state, faces, set(graph.blue), DrawConfig())

    assert plan.new == ("a", "d")
    assert plan.ranges == {"a": (1, 2), "d": (2, 3)}
    assert plan.gates["a"] == Gate("a", F(7, 6), F(4, 3))
    assert plan.gates["d"] == Gate("d", F(5, 3), F(11, 6))
    assert plan.stretch == 3
    assert state.rects["a"].as_tuple() == (1, 1, 3, F(3, 2))
    assert state.positions["a"] == Pt(F(2), F(5, 4))
    assert state.positions["d"] == Pt(F(2), F(7, 4))
    assert state.stack == ["v_S", "a", "d", "v_N"]
    check_step(state, graph, 1)


def test_pin5_end_to_end(pin5, pin5_drawing):
    assert sorted(r.id for r in pin5_drawing.rects) == ["a", "b", "c", "d", "e"]
    assert set(pin5_drawing.positions) == {"a", "b", "c", "d", "e"}
    assert pin5_drawing.meta["steps"] == 4
    assert pin5_drawing.meta["rects"] == 5
    # vertices never move after placement
    assert pin5_drawing.positions["a"] == Pt(F(2), F(5, 4))
    report = verify(pin5, pin5_drawing)
    assert report.passed, report.violations
    assert set(report.checks) == {"subdivision", "containment", "crossing", "planarity", "scaling"}


def test_pin5_is_a_scaling(pin5, pin5_drawing):
    assert adjacencies(pin5_drawing.rects) == adjacencies(pin5.rects)


def test_run_is_deterministic(pin5):
    assert dumps_drawing(run(pin5)) == dumps_drawing(run(pin5))


def test_growth_is_finite(pin5_drawing):
    growth = pin5_drawing.meta["growth"]
    assert math.isfinite(growth) and growth > 0


def test_each_step_is_logged_at_info(pin5, caplog):
    with caplog.at_level(logging.INFO, logger="simdraw.engine"):
        run(pin5)
    done = [r for r in caplog.records if " done, right edge at " in r.getMessage()]
    assert [r.levelno for r in done] == [logging.INFO] * 4
    assert done[-1].getMessage().startswith("step 4/4 done")


def test_step_hook_sees_every_step(pin5):
    snaps = []
    run(pin5, on_step=snaps.append)
    assert [s.step for s in snaps] == [1, 2, 3, 4]
    assert len(snaps[0].gates) == 2
    placed = {}
    for snap in snaps:
        positions = dict(snap.positions)
        for vid, p in placed.items():
            assert positions[vid] == p
        placed = positions
    assert "v_E" in dict(snaps[-1].positions)


def test_single_rect(single_rect):
    drawing = run(single_rect, DrawConfig(check_steps=True))
    assert [r.id for r in drawing.rects] == ["r"]
    assert drawing.meta["steps"] == 2
    assert verify(single_rect, drawing).passed


def test_config_magnitudes_keep_validity(pin5):
    config = DrawConfig(notch_width=3, stretch_margin=2, pole_thickness=2, base_box=5)
    drawing = run(pin5, config)
    assert verify(pin5, drawing).passed


def test_reserved_pole_name_is_rejected():
    r = Rect.of("v_E", 0, 0, 1, 1)
    with pytest.raises(PoleNameError):
        run(Subdivision(r.moved(id="bounds"), (r,)))


def test_construction_error_carries_step():
    exc = ConstructionError("boundaries out of order", step=7)
    assert exc.step == 7
    assert str(exc) == "step 7: boundaries out of order"
    assert isinstance(exc, RuntimeError)


def test_corpus_draws_and_verifies(small_corpus):
    for seed, sub in small_corpus:
        drawing = run(sub)
        report = verify(sub, drawing)
        assert report.passed, (seed, report.violations[:3])
        assert adjacencies(drawing.rects) == adjacencies(sub.rects)


def test_corpus_with_per_step_checks(small_corpus):
    for _, sub in small_corpus:
        run(sub, DrawConfig(check_steps=True))


def _bits(drawing) -> int:
    values = [c for r in drawing.rects for c in r.as_tuple()]
    values += [c for p in drawing.positions.values() for c in (p.x, p.y)]
    return max(max(F(c).numerator.bit_length(), F(c).denominator.bit_length()) for c in values)


def test_coordinates_stay_small(small_corpus):
    for seed, sub in small_corpus:
        assert _bits(run(sub)) < 512, seed


def test_restretching_asks_for_no_more(small_corpus):
    config = DrawConfig()
    for seed, sub in small_corpus[:6]:
        graph = derive_primal(augment_boundary(sub))
        blue = set(graph.blue)
        state = base_case(config)
        for faces in subgraph_sequence(build_face_plan(build_red(graph))):
            plan = open_notch(state, faces, blue, config)
            place_gates(state, plan)
            x = compute_stretch(state, plan, config)
            apply_stretch(state, plan, x)
            first = dict(plan.thresholds)
            plan.thresholds.clear()
            compute_stretch(state, plan, config)
            assert set(plan.thresholds) == set(first)
            assert all(t <= x for t in plan.thresholds.values()), (seed, faces.index)
            plan.stretch = x
            resolve_nondiverging(state, plan)
            place_step_vertices(state, plan)
            state.step = faces.index


@pytest.mark.slow
def test_full_corpus_draws_and_verifies():
    count = 0
    for seed, sub in corpus(100, seed=0, min_rects=5, max_rects=60, pinwheel_p=0.3):
        drawing = run(sub)
        report = verify(sub, drawing)
        assert report.passed, (seed, report.violations[:3])
        assert adjacencies(drawing.rects) == adjacencies(sub.rects)
        assert _bits(drawing) < 4096, seed
        count += 1
    assert count == 100


@pytest.mark.slow
def test_full_corpus_per_step_checks():
    for _, sub in corpus(25, seed=1000, min_rects=5, max_rects=60, pinwheel_p=0.3):
        run(sub, DrawConfig(check_steps=True))
