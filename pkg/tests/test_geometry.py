import math
from fractions import Fraction as F

import numpy as np
import pytest

from models import Gate, Pt, Rect, Seg
from simdraw.errors import GeometryPreconditionError
from simdraw.geometry import (
    blind_segment,
    boundary_shift_nondiverging,
    gate_meets_blind,
    gate_reaches_blind,
    min_stretch_diverging,
    min_stretch_horizontal,
    min_stretch_nondiverging,
    seg_common,
    segment_intersection,
    simplest_between,
    visibility_region,
)

STRETCHES = (0, 1, 10, 1000)


# ------------------------------------------------------------------
# Primitives
# ------------------------------------------------------------------


def test_seg_common_vertical_and_horizontal():
    u, v = Rect.of("u", 0, 0, 2, 4), Rect.of("v", 2, 1, 3, 6)
    assert seg_common(u, v) == Seg(Pt.of(2, 1), Pt.of(2, 4))
    w = Rect.of("w", 1, 4, 5, 5)
    assert seg_common(u, w) == Seg(Pt.of(1, 4), Pt.of(2, 4))


def test_seg_common_corner_touch_is_not_adjacent():
    assert seg_common(Rect.of("u", 0, 0, 1, 1), Rect.of("v", 1, 1, 2, 2)) is None


def test_segment_intersection_cases():
    assert segment_intersection(Pt.of(0, 0), Pt.of(2, 2), Pt.of(0, 2), Pt.of(2, 0)) == Pt.of(1, 1)
    assert segment_intersection(Pt.of(0, 0), Pt.of(1, 0), Pt.of(0, 1), Pt.of(1, 1)) is None
    overlap = segment_intersection(Pt.of(0, 0), Pt.of(3, 0), Pt.of(1, 0), Pt.of(5, 0))
    assert overlap == Seg(Pt.of(1, 0), Pt.of(3, 0))


def test_simplest_between_values():
    assert simplest_between(F(9, 2), F(5)) == F(14, 3)
    assert simplest_between(F(7, 6), F(4, 3)) == F(5, 4)
    assert simplest_between(F(5, 4), F(3)) == 2
    assert simplest_between(F(5, 3), F(11, 6)) == F(7, 4)
    assert simplest_between(F(1, 3), F(1, 2)) == F(2, 5)
    assert simplest_between(F(-1), F(3)) == 0
    assert simplest_between(F(-5, 2), F(-2)) == F(-7, 3)


def test_simplest_between_ignores_endpoint_size():
    lo = 1 + F(1, 10**40)
    assert simplest_between(lo, lo + F(1, 10**20)) == 1 + F(1, 10**20)


def test_simplest_between_rejects_empty_interval():
    with pytest.raises(GeometryPreconditionError):
        simplest_between(F(1), F(1))
    with pytest.raises(GeometryPreconditionError):
        simplest_between(F(2), F(1))


def test_simplest_between_has_least_denominator(rng):
    for _ in range(500):
        a, b = (F(int(rng.integers(-200, 200)), int(rng.integers(1, 60))) for _ in range(2))
        if a == b:
            continue
        lo, hi = min(a, b), max(a, b)
        x = simplest_between(lo, hi)
        assert lo < x < hi
        for q in range(1, x.denominator):
            assert F(math.floor(lo * q) + 1, q) >= hi


def test_visibility_region_classifies_diverging():
    u, v = Rect.of("u", 0, 0, 2, 4), Rect.of("v", 2, 1, 3, 3)
    assert visibility_region(Pt.of(1, 2), u, v).diverging
    assert visibility_region(Pt.of(1, 3), u, v).diverging
    assert not visibility_region(Pt.of(1, F(7, 2)), u, v).diverging


def test_visibility_region_rejects_apex_on_boundary():
    u, v = Rect.of("u", 0, 0, 2, 4), Rect.of("v", 2, 1, 3, 3)
    with pytest.raises(GeometryPreconditionError):
        visibility_region(Pt.of(2, 2), u, v)


def test_visibility_region_rejects_non_adjacent():
    with pytest.raises(GeometryPreconditionError):
        visibility_region(Pt.of(1, 1), Rect.of("u", 0, 0, 2, 2), Rect.of("v", 3, 0, 4, 2))


# ------------------------------------------------------------------
# Worked examples
# ------------------------------------------------------------------


def test_min_stretch_horizontal_examples():
    u, v, p = Rect.of("u", 0, 4, 4, 6), Rect.of("v", 2, 0, 4, 4), Pt.of(1, 5)
    assert min_stretch_horizontal(p, u, v, Gate("v", F(2), F(3)), "u-above") == 4
    assert min_stretch_horizontal(p, u, v, Gate("v", F(1), F(3, 2)), "u-above") == 5


def test_min_stretch_horizontal_needs_shared_right_edge():
    u, v = Rect.of("u", 0, 4, 4, 6), Rect.of("v", 2, 0, 5, 4)
    with pytest.raises(GeometryPreconditionError):
        min_stretch_horizontal(Pt.of(1, 5), u, v, Gate("v", F(1), F(2)), "u-above")


def test_min_stretch_horizontal_wrong_orientation():
    u, v = Rect.of("u", 0, 4, 4, 6), Rect.of("v", 2, 0, 4, 4)
    with pytest.raises(GeometryPreconditionError):
        min_stretch_horizontal(Pt.of(1, 5), u, v, Gate("v", F(1), F(2)), "u-below")


def test_min_stretch_diverging_examples():
    u, p = Rect.of("u", 0, 0, 2, 4), Pt.of(1, 2)
    assert min_stretch_diverging(p, u, Rect.of("v", 2, 1, 3, 3)) == 3
    assert min_stretch_diverging(p, u, Rect.of("v", 2, 0, 3, 10)) == 5


def test_min_stretch_diverging_rejects_nondiverging():
    u, v = Rect.of("u", 0, 2, 2, 6), Rect.of("v", 2, 0, 4, 4)
    with pytest.raises(GeometryPreconditionError):
        min_stretch_diverging(Pt.of(1, 5), u, v)


def test_min_stretch_nondiverging_examples():
    u, v, p = Rect.of("u", 0, 2, 2, 6), Rect.of("v", 2, 0, 4, 4), Pt.of(1, 5)
    assert min_stretch_nondiverging(p, u, v, Gate("v", F(1), F(3, 2))) == F(9, 2)
    assert min_stretch_nondiverging(p, u, v, Gate("v", F(3), F(7, 2))) == 4


def test_blind_segment_examples():
    u, p = Rect.of("u", 0, 2, 2, 6), Pt.of(1, 5)
    assert blind_segment(p, u, Rect.of("v", 2, 0, 4, 4)) == Seg(Pt.of(4, 2), Pt.of(4, 4))
    assert blind_segment(p, u, Rect.of("v", 2, 0, 100, 4)) == Seg(Pt.of(100, 0), Pt.of(100, 4))


def test_blind_segment_rejects_diverging():
    with pytest.raises(GeometryPreconditionError):
        blind_segment(Pt.of(1, 2), Rect.of("u", 0, 0, 2, 4), Rect.of("v", 2, 1, 3, 3))


def test_boundary_shift_example():
    u, v, p = Rect.of("u", 0, 2, 2, 6), Rect.of("v", 2, 0, 4, 4), Pt.of(1, 5)
    g = Gate("v", F(3), F(7, 2))
    assert gate_meets_blind(p, u, v, g)
    y = boundary_shift_nondiverging(p, u, v, g)
    assert y == F(14, 3)
    assert F(9, 2) < y < p.y
    shifted = v.moved(y2=y)
    vis = visibility_region(p, u, shifted)
    assert vis.contains(Pt.of(4, 3)) and vis.contains(Pt.of(4, F(7, 2)))


def test_boundary_shift_needs_gate_at_blind():
    u, v, p = Rect.of("u", 0, 2, 2, 6), Rect.of("v", 2, 0, 4, 4), Pt.of(1, 5)
    g = Gate("v", F(1), F(3, 2))
    assert not gate_reaches_blind(p, u, v, g)
    with pytest.raises(GeometryPreconditionError):
        boundary_shift_nondiverging(p, u, v, g)


# ------------------------------------------------------------------
# Random configurations: postconditions hold for every x >= X
# ------------------------------------------------------------------


def _mirror_rect(r: Rect) -> Rect:
    return Rect(r.id, r.x1, -r.y2, r.x2, -r.y1)


def _frac(rng, lo, hi, k=8):
    """Value strictly inside (lo, hi) on a grid of k steps."""
    return lo + (hi - lo) * F(int(rng.integers(1, k)), k)


def _diverging_case(rng):
    uh = int(rng.integers(2, 11))
    vy1 = int(rng.integers(-5, uh))
    vy2 = int(rng.integers(max(vy1 + 1, 1), uh + 6))
    u = Rect.of("u", 0, 0, 2, uh)
    v = Rect.of("v", 2, vy1, 2 + int(rng.integers(1, 5)), vy2)
    lo, hi = max(0, vy1), min(uh, vy2)
    p = Pt(F(int(rng.integers(1, 20)), 10), _frac(rng, F(lo), F(hi)))
    return p, u, v


def _nondiverging_case(rng):
    uh = int(rng.integers(4, 11))
    vy2 = int(rng.integers(1, uh - 1))
    vy1 = vy2 - int(rng.integers(1, 7))
    u = Rect.of("u", 0, 0, 2, uh)
    v = Rect.of("v", 2, vy1, 2 + int(rng.integers(1, 5)), vy2)
    p = Pt(F(int(rng.integers(1, 20)), 10), _frac(rng, F(vy2), F(uh)))
    i, j = sorted(rng.choice(np.arange(1, 10), size=2, replace=False))
    g = Gate("v", vy1 + (vy2 - vy1) * F(int(i), 10), vy1 + (vy2 - vy1) * F(int(j), 10))
    if rng.random() < 0.5:
        p = Pt(p.x, -p.y)
        u, v = _mirror_rect(u), _mirror_rect(v)
        g = Gate("v", -g.y_hi, -g.y_lo)
    return p, u, v, g


def _horizontal_case(rng):
    x2 = int(rng.integers(4, 9))
    ux1, vx1 = int(rng.integers(0, x2 - 1)), int(rng.integers(0, x2 - 1))
    vh, uh = int(rng.integers(1, 6)), int(rng.integers(1, 6))
    v = Rect.of("v", vx1, 0, x2, vh)
    u = Rect.of("u", ux1, vh, x2, vh + uh)
    p = Pt(_frac(rng, F(ux1), F(x2)), _frac(rng, F(vh), F(vh + uh)))
    a, b = sorted(rng.choice(np.arange(1, 10), size=2, replace=False))
    g = Gate("v", vh * F(int(a), 10), vh * F(int(b), 10))
    if rng.random() < 0.5:
        return p, u, v, g, "u-above"
    p = Pt(p.x, -p.y)
    g = Gate("v", -g.y_hi, -g.y_lo)
    return p, _mirror_rect(u), _mirror_rect(v), g, "u-below"


def _segment_oracle(p: Pt, q: Pt, seg: Seg) -> bool:
    hit = segment_intersection(p, q, seg.a, seg.b)
    return isinstance(hit, Pt) and hit not in (seg.a, seg.b)


@pytest.mark.parametrize("count", [1000])
def test_diverging_postcondition(rng, count):
    for _ in range(count):
        p, u, v = _diverging_case(rng)
        x = min_stretch_diverging(p, u, v)
        for extra in STRETCHES:
            w = v.moved(x2=x + extra)
            vis = visibility_region(p, u, w)
            assert vis.contains_closed(Pt(w.x2, w.y1))
            assert vis.contains_closed(Pt(w.x2, w.y2))


@pytest.mark.parametrize("count", [1000])
def test_nondiverging_and_shift_postconditions(rng, count):
    for _ in range(count):
        p, u, v, g = _nondiverging_case(rng)
        x = min_stretch_nondiverging(p, u, v, g)
        top = p.y > v.y2
        for extra in STRETCHES:
            w = v.moved(x2=x + extra)
            vis = visibility_region(p, u, w)
            assert gate_reaches_blind(p, u, w, g)
            if top:
                assert g.y_lo >= vis.lower_line.y_at(w.x2)
            else:
                assert g.y_hi <= vis.upper_line.y_at(w.x2)
            if extra == 0:
                continue
            y = boundary_shift_nondiverging(p, u, w, g)
            shifted = w.moved(y2=y) if top else w.moved(y1=y)
            after = visibility_region(p, u, shifted)
            assert after.contains(Pt(w.x2, g.y_lo))
            assert after.contains(Pt(w.x2, g.y_hi))


@pytest.mark.parametrize("count", [1000])
def test_horizontal_postcondition(rng, count):
    for _ in range(count):
        p, u, v, g, orientation = _horizontal_case(rng)
        x = min_stretch_horizontal(p, u, v, g, orientation)
        for extra in STRETCHES:
            uu, vv = u.moved(x2=x + extra), v.moved(x2=x + extra)
            vis = visibility_region(p, uu, vv)
            assert vis.contains_closed(Pt(vv.x2, g.y_lo))
            assert vis.contains_closed(Pt(vv.x2, g.y_hi))


@pytest.mark.parametrize("count", [50, pytest.param(500, marks=pytest.mark.slow)])
def test_visibility_agrees_with_segment_oracle(rng, count):
    for _ in range(count):
        if rng.random() < 0.5:
            p, u, v = _diverging_case(rng)
        else:
            p, u, v, _ = _nondiverging_case(rng)
        vis = visibility_region(p, u, v)
        for _ in range(200):
            q = Pt(_frac(rng, v.x1, v.x2, 64), _frac(rng, v.y1, v.y2, 64))
            assert vis.contains(q) == _segment_oracle(p, q, vis.seg)


@pytest.mark.parametrize("count", [50])
def test_blind_is_outside_visibility(rng, count):
    for _ in range(count):
        p, u, v, _ = _nondiverging_case(rng)
        blind = blind_segment(p, u, v)
        if blind is None:
            continue
        vis = visibility_region(p, u, v)
        for k in range(1, 8):
            y = blind.y_lo + (blind.y_hi - blind.y_lo) * F(k, 8)
            assert not vis.contains(Pt(v.x2, y))


@pytest.mark.parametrize("count", [300])
def test_blind_and_visible_parts_cover_right_side(rng, count):
    for _ in range(count):
        p, u, v, _ = _nondiverging_case(rng)
        vis = visibility_region(p, u, v)
        blind = blind_segment(p, u, v)
        # the side splits into blind and visible parts with no gap between them
        if p.y > v.y2:
            lo, hi = max(v.y1, vis.lower_line.y_at(v.x2)), v.y2
            if vis.seg.y_lo == v.y1:
                assert lo == v.y1
        else:
            lo, hi = v.y1, min(v.y2, vis.upper_line.y_at(v.x2))
            if vis.seg.y_hi == v.y2:
                assert hi == v.y2
        for k in range(0, 33):
            y = lo + (hi - lo) * F(k, 32)
            in_blind = blind is not None and blind.y_lo <= y <= blind.y_hi
            assert in_blind or vis.contains_closed(Pt(v.x2, y)), (p, u, v, y)
