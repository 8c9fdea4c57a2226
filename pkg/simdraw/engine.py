"""Inductive construction of a scaled dual with a straight-line simultaneous drawing.

Faces of G^R are processed in topological order. Each step opens a notch
on the right edge of the current layout, fills it with the rects on the
face's right boundary, stretches the layout until every new vertex can see
its placed neighbours, and places the new vertices.
"""

import logging
import math
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Set, Tuple

from models import (
    POLE_NAMES,
    DrawConfig,
    Gate,
    LabeledGraph,
    Pt,
    Rect,
    SimDrawing,
    Subdivision,
    rat,
    rat_str,
)
from simdraw.checks.single_crossing import crossing_violations
from simdraw.errors import ConstructionError, GeometryPreconditionError
from simdraw.geometry import (
    boundary_shift_nondiverging,
    min_stretch_diverging,
    min_stretch_horizontal,
    min_stretch_nondiverging,
    simplest_between,
    visibility_region,
)
from simdraw.stgraph import build_face_plan, build_red, subgraph_sequence
from simdraw.subdivision import (
    adjacencies,
    augment_boundary,
    bounding_box,
    derive_primal,
    restrict,
    strip_boundary,
    validate,
)
from simdraw.types import LayoutState, StepFaces, StepPlan, StepSnapshot

logger = logging.getLogger(__name__)

V_S, V_N, V_W, V_E = POLE_NAMES

StepHook = Callable[[StepSnapshot], None]


def base_case(config: Optional[DrawConfig] = None) -> LayoutState:
    """v_S, v_W, v_N stacked as equal boxes, vertices at their centres."""
    box = rat((config or DrawConfig()).base_box)
    state = LayoutState()
    for i, rid in enumerate((V_S, V_W, V_N)):
        r = Rect(rid, rat(0), i * box, box, (i + 1) * box)
        state.put(r)
        state.positions[rid] = r.center
    state.stack = [V_S, V_W, V_N]
    return state


# ---------------------------------------------------------------------------
# One induction step
# ---------------------------------------------------------------------------


def _spread(lo, hi, count: int) -> List:
    """`count` increasing small rationals strictly between lo and hi, near even spacing."""
    step = (hi - lo) / (count + 1)
    return [
        simplest_between(lo + step * k - step / 2, lo + step * k + step / 2)
        for k in range(1, count + 1)
    ]


def _neighbour_ranges(
    left: Tuple[str, ...], new: Tuple[str, ...], blue: Set[Tuple[str, str]], step: int
) -> Dict[str, Tuple[int, int]]:
    a, b = len(left), len(new)
    ranges: Dict[str, Tuple[int, int]] = {}
    for q, v in enumerate(new):
        idx = [p for p in range(2, a) if (left[p - 1], v) in blue]
        if q == 0:
            idx.append(1)
        if q == b - 1:
            idx.append(a)
        if not idx:
            raise ConstructionError(f"{v} has no neighbour on the left boundary", step=step)
        lo, hi = min(idx), max(idx)
        gaps = [left[p - 1] for p in range(max(lo, 2), min(hi, a - 1) + 1) if (left[p - 1], v) not in blue]
        if gaps:
            raise ConstructionError(
                f"input inconsistency: {v} skips left neighbours {gaps}", step=step
            )
        ranges[v] = (lo, hi)
    for q in range(b - 1):
        hi, lo = ranges[new[q]][1], ranges[new[q + 1]][0]
        if hi != lo or not 2 <= hi <= a - 1:
            raise ConstructionError(
                f"input inconsistency: {new[q]} and {new[q + 1]} do not share one left neighbour",
                step=step,
            )
    return ranges


def open_notch(
    state: LayoutState, faces: StepFaces, blue: Set[Tuple[str, str]], config: DrawConfig
) -> StepPlan:
    """Stretch the right boundary around the face and insert its new rects."""
    left, right, step = faces.left, faces.right, faces.index
    new = right[1:-1]
    a, b = len(left), len(new)
    if a < 3 or b < 1:
        raise ConstructionError(f"face {faces.face} has a={a}, b={b}", step=step)

    at = state.stack.index(left[0])
    if tuple(state.stack[at : at + a]) != left:
        raise ConstructionError(f"{list(left)} is not contiguous on the right boundary", step=step)

    W = state.right_edge
    if any(state.rects[rid].x2 != W for rid in state.stack):
        raise ConstructionError("right boundary rects do not share x2", step=step)
    W2 = W + rat(config.notch_width)
    middle = set(left[1:-1])
    for rid in state.stack:
        if rid not in middle:
            state.put(state.rects[rid].moved(x2=W2))

    ranges = _neighbour_ranges(left, new, blue, step)
    y0, y1 = state.rects[left[1]].y1, state.rects[left[-2]].y2
    if state.rects[left[0]].y2 != y0 or state.rects[left[-1]].y1 != y1:
        raise ConstructionError("left boundary rects are not stacked", step=step)

    bounds: List = [y0] + [None] * (b - 1) + [y1]
    per_u: Dict[int, List[int]] = defaultdict(list)
    for j in range(1, b):
        per_u[ranges[new[j - 1]][1]].append(j)
    for p, js in per_u.items():
        u = state.rects[left[p - 1]]
        for j, y in zip(js, _spread(u.y1, u.y2, len(js))):
            bounds[j] = y

    plan = StepPlan(
        step=step, left=left, right=right, x_left=W, x_right=W2, bounds=bounds, ranges=ranges
    )
    for q in range(b):
        state.put(plan.rect_of(q))
    state.stack[at + 1 : at + a - 1] = list(new)
    logger.debug("step %s: notch at x=%s for %s beside %s", step, W, list(new), list(left))
    return plan


def place_gates(state: LayoutState, plan: StepPlan) -> StepPlan:
    """Middle third between the lowest and highest placed neighbours of each critical vertex."""
    a = plan.a
    y0, y1 = plan.bounds[0], plan.bounds[-1]
    for v in plan.new:
        lo, hi = plan.ranges[v]
        if lo == hi:
            continue
        bottom = y0 if lo == 1 else state.positions[plan.left[lo - 1]].y
        top = y1 if hi == a else state.positions[plan.left[hi - 1]].y
        if not bottom < top:
            raise ConstructionError(f"neighbours of {v} are not ordered bottom to top", step=plan.step)
        third = (top - bottom) / 3
        plan.gates[v] = Gate(v, bottom + third, top - third)
    return plan


def _blue_pairs(plan: StepPlan, v: str) -> List[int]:
    lo, hi = plan.ranges[v]
    return list(range(max(lo, 2), min(hi, plan.a - 1) + 1))


def compute_stretch(state: LayoutState, plan: StepPlan, config: DrawConfig):
    """Least common right edge satisfying every (u_p, v_q) threshold, rounded up, plus the margin."""
    a = plan.a
    for q, v in enumerate(plan.new):
        if not plan.is_critical(v):
            continue
        g = plan.gates[v]
        vr = plan.rect_of(q)
        lo, hi = plan.ranges[v]
        for p in _blue_pairs(plan, v):
            uid = plan.left[p - 1]
            u, pos = state.rects[uid], state.positions[uid]
            if visibility_region(pos, u, vr).diverging:
                x = min_stretch_diverging(pos, u, vr, g)
            else:
                x = min_stretch_nondiverging(pos, u, vr, g)
            plan.thresholds[(uid, v)] = x
        if lo == 1:
            uid = plan.left[0]
            plan.thresholds[(uid, v)] = min_stretch_horizontal(
                state.positions[uid], state.rects[uid], vr, g, "u-below"
            )
        if hi == a:
            uid = plan.left[-1]
            plan.thresholds[(uid, v)] = min_stretch_horizontal(
                state.positions[uid], state.rects[uid], vr, g, "u-above"
            )
    x = math.ceil(max([plan.x_right, *plan.thresholds.values()])) + rat(config.stretch_margin)
    plan.stretch = x
    logger.debug("step %s: stretch to X = %s", plan.step, x)
    return x


def apply_stretch(state: LayoutState, plan: StepPlan, x) -> LayoutState:
    """Move the whole right boundary to x; no vertex moves."""
    if x < state.right_edge:
        raise ConstructionError(f"stretch to {x} would shrink the layout", step=plan.step)
    for rid in state.stack:
        state.put(state.rects[rid].moved(x2=x))
    plan.x_right = x
    return state


def _respace_block(plan: StepPlan, p: int, moved: int, y_apex) -> None:
    """Keep the boundaries lying inside u_p ordered after one of them moved."""
    block = [j for j in range(1, len(plan.bounds) - 1) if plan.ranges[plan.new[j - 1]][1] == p]
    if len(block) < 2:
        return
    first, last = block[0], block[-1]
    if plan.bounds[first] >= plan.bounds[last]:
        # the run of single-neighbour rects between them collapses onto y(u_p)
        if moved == first:
            plan.bounds[last] = y_apex
        else:
            plan.bounds[first] = y_apex
    inner = block[1:-1]
    for j, y in zip(inner, _spread(plan.bounds[first], plan.bounds[last], len(inner))):
        plan.bounds[j] = y


def resolve_nondiverging(state: LayoutState, plan: StepPlan) -> LayoutState:
    """Pull the blind end of each critical rect toward its non-diverging neighbour."""
    b = len(plan.new)
    for q, v in enumerate(plan.new):
        if not plan.is_critical(v):
            continue
        g = plan.gates[v]
        lo, hi = plan.ranges[v]
        for p in (lo, hi):
            if p in (1, plan.a):
                continue
            uid = plan.left[p - 1]
            u, pos = state.rects[uid], state.positions[uid]
            vr = plan.rect_of(q)
            vis = visibility_region(pos, u, vr)
            if vis.diverging:
                continue
            y = boundary_shift_nondiverging(pos, u, vr, g)
            j = q + 1 if pos.y > vis.seg.y_hi else q
            if not 0 < j < b:
                raise ConstructionError(f"shift for {uid}-{v} would move the notch edge", step=plan.step)
            plan.bounds[j] = y
            plan.shifts[(uid, v)] = y
            _respace_block(plan, p, j, pos.y)
            logger.debug("step %s: shifted boundary %s of %s to %s for %s", plan.step, j, v, y, uid)

    if any(lo >= hi for lo, hi in zip(plan.bounds, plan.bounds[1:])):
        raise ConstructionError(f"boundaries out of order: {plan.bounds}", step=plan.step)
    for q in range(b):
        state.put(plan.rect_of(q))
    return state


def _visible(state: LayoutState, uid: str, vr: Rect, point: Pt) -> bool:
    return visibility_region(state.positions[uid], state.rects[uid], vr).contains(point)


def _place_critical(state: LayoutState, plan: StepPlan, q: int, v: str) -> Pt:
    g = plan.gates[v]
    vr = plan.rect_of(q)
    if not g.strictly_inside(vr):
        raise ConstructionError(f"gate of {v} is not inside its right side", step=plan.step)
    W, X = plan.x_left, plan.x_right
    m = simplest_between(g.y_lo, g.y_hi)
    lo, hi = plan.ranges[v]
    nbrs = [plan.left[p - 1] for p in _blue_pairs(plan, v)]
    if lo == 1:
        nbrs.append(plan.left[0])
    if hi == plan.a:
        nbrs.append(plan.left[-1])
    for uid in nbrs:
        for y in (g.y_lo, g.y_hi):
            if not _visible(state, uid, vr, Pt(X, y)):
                raise ConstructionError(f"gate of {v} is not visible from {uid}", step=plan.step)

    # smallest x left of X from which (x, m) still sees every neighbour
    cuts = [W]
    for p in _blue_pairs(plan, v):
        uid = plan.left[p - 1]
        pos = state.positions[uid]
        seg = visibility_region(pos, state.rects[uid], vr).seg
        for s in (seg.y_lo, seg.y_hi):
            if s != pos.y:
                cuts.append(pos.x + (m - pos.y) * (W - pos.x) / (s - pos.y))
    if lo == 1:
        p1 = state.positions[plan.left[0]]
        cuts.append(p1.x + (W - p1.x) * (m - p1.y) / (plan.bounds[0] - p1.y))
    if hi == plan.a:
        pa = state.positions[plan.left[-1]]
        cuts.append(pa.x + (W - pa.x) * (pa.y - m) / (pa.y - plan.bounds[-1]))
    x_lo = max(c for c in cuts if c < X)
    return Pt(simplest_between(x_lo, X), m)


def _place_single(state: LayoutState, plan: StepPlan, q: int, v: str) -> Pt:
    vr = plan.rect_of(q)
    uid = plan.left[plan.ranges[v][0] - 1]
    pos = state.positions[uid]
    m, h = (vr.y1 + vr.y2) / 2, vr.height
    delta = min(vr.width, h) / 4
    off = abs(pos.y - m)
    if off > h / 2:
        delta = min(delta, (h / 2) * (plan.x_left - pos.x) / (off - h / 2) / 2)
    return Pt(simplest_between(plan.x_left, plan.x_left + 2 * delta), m)


def place_step_vertices(state: LayoutState, plan: StepPlan) -> LayoutState:
    """Critical vertices inside their gate's band left of the right edge, the rest beside their only left neighbour."""
    for q, v in enumerate(plan.new):
        if plan.is_critical(v):
            pt = _place_critical(state, plan, q, v)
        else:
            pt = _place_single(state, plan, q, v)
        vr = plan.rect_of(q)
        if not vr.contains_strictly(pt):
            raise ConstructionError(f"vertex {v} falls outside its rect", step=plan.step)
        lo, hi = plan.ranges[v]
        for p in range(lo, hi + 1):
            uid = plan.left[p - 1]
            if not _visible(state, uid, vr, pt):
                raise ConstructionError(f"edge {uid}-{v} leaves [{uid},{v}]", step=plan.step)
        state.positions[v] = pt
    return state


def induction_step(
    state: LayoutState, faces: StepFaces, blue: Set[Tuple[str, str]], config: DrawConfig
) -> StepPlan:
    try:
        plan = open_notch(state, faces, blue, config)
        place_gates(state, plan)
        x = compute_stretch(state, plan, config)
        apply_stretch(state, plan, x)
        resolve_nondiverging(state, plan)
        place_step_vertices(state, plan)
    except GeometryPreconditionError as exc:
        raise ConstructionError(str(exc), step=faces.index) from exc
    state.step = faces.index
    return plan


# ---------------------------------------------------------------------------
# Per-step checking
# ---------------------------------------------------------------------------


def check_step(state: LayoutState, reference: LabeledGraph, step: int) -> None:
    """Current layout is a dual of the placed subgraph with the input's REL and clean edges."""
    rects = list(state.rects.values())
    try:
        validate(Subdivision(bounding_box(rects), tuple(rects)))
    except ValueError as exc:
        raise ConstructionError(f"layout is not a valid subdivision: {exc}", step=step) from exc

    current = derive_primal(Subdivision(bounding_box(rects), tuple(rects)))
    red, blue = restrict(reference, state.rects)
    if set(current.red) != red or set(current.blue) != blue:
        diff = sorted((set(current.red) ^ red) | (set(current.blue) ^ blue))
        raise ConstructionError(f"layout REL differs from the input on {diff}", step=step)

    pairs = sorted(tuple(sorted(p)) for p in adjacencies(rects))
    bad = crossing_violations(state.rects, state.positions, pairs)
    if bad:
        raise ConstructionError(bad[0].message, step=step)


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _snapshot(state: LayoutState, plan: StepPlan, faces: StepFaces) -> StepSnapshot:
    return StepSnapshot(
        step=faces.index,
        face=faces.face,
        rects=tuple(sorted(state.rects.values(), key=lambda r: (r.y1, r.x1, r.id))),
        positions=tuple(sorted(state.positions.items())),
        gates=tuple(plan.gates[v] for v in plan.new if v in plan.gates),
    )


def _meta(drawing: SimDrawing, steps: int) -> dict:
    box = bounding_box(drawing.rects)
    min_width = min(r.width for r in drawing.rects)
    growth = box.width / min_width
    return {
        "steps": steps,
        "rects": len(drawing.rects),
        "width": rat_str(box.width),
        "height": rat_str(box.height),
        "min_width": rat_str(min_width),
        "growth": float(f"{float(growth):.10g}"),
    }


def run(
    subdivision: Subdivision,
    config: Optional[DrawConfig] = None,
    on_step: Optional[StepHook] = None,
) -> SimDrawing:
    """Scaled dual of `subdivision` together with straight-line vertex positions."""
    if config is None:
        config = DrawConfig()

    augmented = augment_boundary(subdivision, config.pole_thickness)
    graph = derive_primal(augmented)
    plan = build_face_plan(build_red(graph))
    blue = set(graph.blue)

    state = base_case(config)
    for faces in subgraph_sequence(plan):
        step = induction_step(state, faces, blue, config)
        if config.check_steps:
            check_step(state, graph, faces.index)
        if on_step is not None:
            on_step(_snapshot(state, step, faces))
        logger.info("step %s/%s done, right edge at %s", faces.index, plan.k, state.right_edge)

    drawing = strip_boundary(state.drawing())
    drawing.meta = _meta(drawing, plan.k)
    logger.info(
        f"Constructed drawing: {len(drawing.rects)} rects in {plan.k} steps, "
        f"growth {drawing.meta['growth']}"
    )
    return drawing
