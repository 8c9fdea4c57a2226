"""Rectangular subdivisions: parsing, validation, REL derivation and the pole frame."""

import json
import logging
from collections import defaultdict
from functools import cmp_to_key
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from models import (
    POLE_NAMES,
    LabeledGraph,
    Pt,
    Rect,
    SimDrawing,
    Subdivision,
    VerificationReport,
    Violation,
    rat,
    rat_str,
)
from simdraw.errors import (
    CoverageError,
    FourCornerError,
    OverlapError,
    PoleNameError,
    SyntaxInputError,
)
from simdraw.geometry import seg_common

logger = logging.getLogger(__name__)

V_S, V_N, V_W, V_E = POLE_NAMES


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def _coord(raw, where: str):
    if isinstance(raw, bool) or not isinstance(raw, (int, float, str)):
        raise SyntaxInputError(f"{where}: coordinate must be a number or string, got {raw!r}")
    try:
        return rat(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise SyntaxInputError(f"{where}: bad coordinate {raw!r} ({exc})") from exc


def canonical(rects: Iterable[Rect]) -> Tuple[Rect, ...]:
    return tuple(sorted(rects, key=lambda r: (r.y1, r.x1, r.id)))


def parse(text: str) -> Subdivision:
    """Parse and validate `.rsub` text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SyntaxInputError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SyntaxInputError("top level must be an object with 'bounds' and 'rects'")
    try:
        raw_bounds = doc["bounds"]
        raw_rects = doc["rects"]
    except KeyError as exc:
        raise SyntaxInputError(f"missing field {exc.args[0]!r}") from exc
    if not isinstance(raw_bounds, list) or len(raw_bounds) != 4:
        raise SyntaxInputError("'bounds' must be a list [x1, y1, x2, y2]")
    if not isinstance(raw_rects, list):
        raise SyntaxInputError("'rects' must be a list")

    try:
        bounds = Rect("bounds", *(_coord(c, "bounds") for c in raw_bounds))
    except ValueError as exc:
        if isinstance(exc, SyntaxInputError):
            raise
        raise SyntaxInputError(str(exc)) from exc

    rects: List[Rect] = []
    seen = set()
    for i, d in enumerate(raw_rects):
        if not isinstance(d, dict):
            raise SyntaxInputError(f"rects[{i}] must be an object")
        try:
            rid = d["id"]
            coords = [d[k] for k in ("x1", "y1", "x2", "y2")]
        except KeyError as exc:
            raise SyntaxInputError(f"rects[{i}]: missing field {exc.args[0]!r}") from exc
        if not isinstance(rid, str) or not rid:
            raise SyntaxInputError(f"rects[{i}]: id must be a non-empty string")
        if rid in seen:
            raise SyntaxInputError(f"duplicate rect id {rid!r}")
        seen.add(rid)
        values = [_coord(c, f"rect {rid!r}") for c in coords]
        try:
            rects.append(Rect(rid, *values))
        except ValueError as exc:
            raise SyntaxInputError(str(exc)) from exc

    sub = Subdivision(bounds, canonical(rects))
    validate(sub)
    logger.info(f"Parsed subdivision with {len(sub)} rects")
    return sub


def serialize(s: Subdivision) -> str:
    doc = {
        "bounds": [rat_str(c) for c in s.bounds.as_tuple()],
        "rects": [
            {
                "id": r.id,
                "x1": rat_str(r.x1),
                "y1": rat_str(r.y1),
                "x2": rat_str(r.x2),
                "y2": rat_str(r.y2),
            }
            for r in canonical(s.rects)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _gap_point(s: Subdivision) -> Optional[Pt]:
    """Centre of some grid cell of the bounds that no rect covers."""
    xs = sorted({s.bounds.x1, s.bounds.x2, *(c for r in s.rects for c in (r.x1, r.x2))})
    ys = sorted({s.bounds.y1, s.bounds.y2, *(c for r in s.rects for c in (r.y1, r.y2))})
    xs = [x for x in xs if s.bounds.x1 <= x <= s.bounds.x2]
    ys = [y for y in ys if s.bounds.y1 <= y <= s.bounds.y2]
    for x0, x1 in zip(xs, xs[1:]):
        for y0, y1 in zip(ys, ys[1:]):
            p = Pt((x0 + x1) / 2, (y0 + y1) / 2)
            if not any(r.contains_strictly(p) for r in s.rects):
                return p
    return None


def validate(s: Subdivision) -> None:
    """Raise an InputError subclass unless s is a rectangular dual."""
    if not s.rects:
        raise CoverageError("subdivision has no rectangles")
    b = s.bounds
    for r in s.rects:
        if r.x1 < b.x1 or r.y1 < b.y1 or r.x2 > b.x2 or r.y2 > b.y2:
            raise CoverageError(f"rect {r.id!r} leaves the bounds", point=r.center)

    for r, q in combinations(s.rects, 2):
        if max(r.x1, q.x1) < min(r.x2, q.x2) and max(r.y1, q.y1) < min(r.y2, q.y2):
            raise OverlapError(r.id, q.id)

    if sum(r.area for r in s.rects) != b.area:
        gap = _gap_point(s)
        where = f" at ({gap.x}, {gap.y})" if gap is not None else ""
        raise CoverageError(f"rects do not cover the bounds{where}", point=gap)

    corners: Dict[Pt, List[str]] = defaultdict(list)
    for r in s.rects:
        for c in r.corners():
            corners[c].append(r.id)
    for point, ids in corners.items():
        if len(ids) >= 4:
            raise FourCornerError(point, ids)


def is_valid(s: Subdivision) -> bool:
    try:
        validate(s)
    except ValueError:
        return False
    return True


def bounding_box(rects: Iterable[Rect], rid: str = "bounds") -> Rect:
    rects = list(rects)
    return Rect(
        rid,
        min(r.x1 for r in rects),
        min(r.y1 for r in rects),
        max(r.x2 for r in rects),
        max(r.y2 for r in rects),
    )


# ---------------------------------------------------------------------------
# Primal graph and REL
# ---------------------------------------------------------------------------


def adjacencies(rects: Iterable[Rect]) -> Dict[frozenset, str]:
    """Every positive-length contact as {a, b} -> "horizontal" | "vertical".

    A horizontal adjacency shares a horizontal segment (one rect on top of the
    other); a vertical adjacency shares a vertical one.
    """
    out: Dict[frozenset, str] = {}
    for r, q in combinations(list(rects), 2):
        seg = seg_common(r, q)
        if seg is not None:
            out[frozenset((r.id, q.id))] = "horizontal" if seg.horizontal else "vertical"
    return out


def _angle_cmp(a: Pt, b: Pt) -> int:
    """Counterclockwise angle order of direction vectors, starting east."""

    def half(p: Pt) -> int:
        return 0 if p.y > 0 or (p.y == 0 and p.x > 0) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    c = a.x * b.y - a.y * b.x
    return -1 if c > 0 else (1 if c < 0 else 0)


def _find_poles(s: Subdivision) -> Dict[str, Optional[str]]:
    if is_augmented(s):
        return {name: name for name in POLE_NAMES}
    b = s.bounds
    poles: Dict[str, Optional[str]] = {name: None for name in POLE_NAMES}
    for r in s.rects:
        if r.y1 == b.y1 and r.x1 == b.x1 and r.x2 == b.x2:
            poles[V_S] = r.id
        if r.y2 == b.y2 and r.x1 == b.x1 and r.x2 == b.x2:
            poles[V_N] = r.id
        if r.x1 == b.x1 and r.y1 == b.y1 and r.y2 == b.y2:
            poles[V_W] = r.id
        if r.x2 == b.x2 and r.y1 == b.y1 and r.y2 == b.y2:
            poles[V_E] = r.id
    return poles


def derive_primal(s: Subdivision) -> LabeledGraph:
    """Primal graph of s with the REL read off the geometry.

    Red edges run bottom -> top across horizontal contacts, blue edges
    left -> right across vertical ones. The rotation system orders each
    vertex's neighbours counterclockwise by the direction from its rect's
    centre to the midpoint of the shared segment.
    """
    rects = list(s.rects)
    g = LabeledGraph(vertices=[r.id for r in rects])
    around: Dict[str, List[Tuple[Pt, str]]] = {r.id: [] for r in rects}

    for r, q in combinations(rects, 2):
        seg = seg_common(r, q)
        if seg is None:
            continue
        if seg.horizontal:
            lower, upper = (r, q) if r.y2 == seg.a.y else (q, r)
            g.red.append((lower.id, upper.id))
        else:
            left, right = (r, q) if r.x2 == seg.a.x else (q, r)
            g.blue.append((left.id, right.id))
        mid = Pt((seg.a.x + seg.b.x) / 2, (seg.a.y + seg.b.y) / 2)
        for me, other in ((r, q), (q, r)):
            c = me.center
            around[me.id].append((Pt(mid.x - c.x, mid.y - c.y), other.id))

    g.red.sort()
    g.blue.sort()
    key = cmp_to_key(lambda a, b: _angle_cmp(a[0], b[0]))
    g.rotation = {rid: [n for _, n in sorted(items, key=key)] for rid, items in around.items()}
    g.poles = _find_poles(s)
    logger.debug(f"derived {len(g.red)} red and {len(g.blue)} blue edges")
    return g


# ---------------------------------------------------------------------------
# Pole frame
# ---------------------------------------------------------------------------


def _frame(bounds: Rect, t) -> Dict[str, Rect]:
    x1, y1, x2, y2 = bounds.as_tuple()
    return {
        V_S: Rect(V_S, x1 - t, y1 - t, x2 + t, y1),
        V_N: Rect(V_N, x1 - t, y2, x2 + t, y2 + t),
        V_W: Rect(V_W, x1 - t, y1, x1, y2),
        V_E: Rect(V_E, x2, y1, x2 + t, y2),
    }


def is_augmented(s: Subdivision) -> bool:
    """True when the four poles are present by name and framing geometry."""
    by_id = s.by_id()
    if not all(name in by_id for name in POLE_NAMES):
        return False
    inner = [r for r in s.rects if r.id not in POLE_NAMES]
    if not inner:
        return False
    box = bounding_box(inner)
    t = box.y1 - by_id[V_S].y1
    if t <= 0:
        return False
    return all(by_id[name] == r for name, r in _frame(box, t).items())


def augment_boundary(s: Subdivision, thickness=1) -> Subdivision:
    """Surround s with the four pole strips v_S, v_N, v_W, v_E."""
    ids = set(s.ids)
    if ids & set(POLE_NAMES):
        if is_augmented(s):
            return s
        clash = sorted(ids & set(POLE_NAMES))
        raise PoleNameError(f"rect ids {clash} are reserved for the boundary poles")
    t = rat(thickness)
    if t <= 0:
        raise ValueError("pole thickness must be positive")
    frame = _frame(s.bounds, t)
    b = s.bounds
    bounds = Rect("bounds", b.x1 - t, b.y1 - t, b.x2 + t, b.y2 + t)
    return Subdivision(bounds, canonical([*s.rects, *frame.values()]))


def strip_boundary(d: SimDrawing) -> SimDrawing:
    """Remove pole rects and pole vertices from a drawing."""
    if not d.rects:
        raise ValueError("nothing to strip: drawing has no rectangles")
    rects = [r for r in d.rects if r.id not in POLE_NAMES]
    if len(rects) == len(d.rects):
        return d
    positions = {k: p for k, p in d.positions.items() if k not in POLE_NAMES}
    return SimDrawing(rects=rects, positions=positions, meta=dict(d.meta))


# ---------------------------------------------------------------------------
# REL validation
# ---------------------------------------------------------------------------

RED_OUT, BLUE_IN, RED_IN, BLUE_OUT = "red-out", "blue-in", "red-in", "blue-out"
_PATTERN = [RED_OUT, BLUE_IN, RED_IN, BLUE_OUT]


def _label(g: LabeledGraph, v: str, n: str) -> Optional[str]:
    col = g.color_of(v, n)
    if col is None:
        return None
    color, outgoing = col
    if color == "red":
        return RED_OUT if outgoing else RED_IN
    return BLUE_OUT if outgoing else BLUE_IN


def _groups(g: LabeledGraph, v: str) -> List[str]:
    labels = (_label(g, v, n) for n in g.rotation.get(v, []))
    return [x for x in labels if x is not None]


def _collapse_cyclic(labels: List[str]) -> List[str]:
    runs = [x for i, x in enumerate(labels) if i == 0 or labels[i - 1] != x]
    if len(runs) > 1 and runs[0] == runs[-1]:
        runs.pop()
    return runs


def _is_rotation_of(runs: List[str], pattern: List[str]) -> bool:
    if len(runs) != len(pattern):
        return False
    return any(runs[i:] + runs[:i] == pattern for i in range(len(runs)))


_POLE_RULE = {V_S: RED_OUT, V_N: RED_IN, V_W: BLUE_OUT, V_E: BLUE_IN}


def validate_rel(g: LabeledGraph) -> VerificationReport:
    """Check the counterclockwise four-group pattern and the pole conditions."""
    report = VerificationReport(checks={"rel": True})
    pole_of = {rid: name for name, rid in g.poles.items() if rid is not None}
    poles = set(pole_of)

    for v in g.vertices:
        if v in poles:
            expected = _POLE_RULE[pole_of[v]]
            bad = [
                n
                for n in g.rotation.get(v, [])
                if n not in poles and _label(g, v, n) not in (None, expected)
            ]
            if bad:
                report.add(
                    Violation("rel", f"pole {v} has edges to {bad} that are not {expected}", (v,))
                )
            continue
        labels = _groups(g, v)
        runs = _collapse_cyclic(labels)
        if not _is_rotation_of(runs, _PATTERN):
            report.add(
                Violation("rel", f"vertex {v} has pattern {labels}, expected a rotation of {_PATTERN}", (v,))
            )
    return report


def restrict(g: LabeledGraph, keep: Iterable[str]) -> Tuple[set, set]:
    """Red and blue edge sets of g induced on `keep`."""
    keep = set(keep)
    red = {e for e in g.red if e[0] in keep and e[1] in keep}
    blue = {e for e in g.blue if e[0] in keep and e[1] in keep}
    return red, blue
