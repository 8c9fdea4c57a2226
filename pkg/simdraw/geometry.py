"""Exact rational geometry: segments, visibility regions and stretch solvers."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from models import Gate, Pt, Rect, Seg
from simdraw.errors import GeometryPreconditionError

logger = logging.getLogger(__name__)

Interval = Tuple[Fraction, Fraction]


def cross(o: Pt, a: Pt, b: Pt) -> Fraction:
    """Twice the signed area of (o, a, b); > 0 when b is left of o->a."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def seg_common(u: Rect, v: Rect) -> Optional[Seg]:
    """Maximal shared boundary segment of two rectangles, None if it has no length."""
    if u.x2 == v.x1 or v.x2 == u.x1:
        x = u.x2 if u.x2 == v.x1 else u.x1
        lo, hi = max(u.y1, v.y1), min(u.y2, v.y2)
        if lo < hi:
            return Seg(Pt(x, lo), Pt(x, hi))
    if u.y2 == v.y1 or v.y2 == u.y1:
        y = u.y2 if u.y2 == v.y1 else u.y1
        lo, hi = max(u.x1, v.x1), min(u.x2, v.x2)
        if lo < hi:
            return Seg(Pt(lo, y), Pt(hi, y))
    return None


def crossing_y(a: Pt, b: Pt, x: Fraction) -> Fraction:
    """y where the line through a and b meets the vertical line at x."""
    if a.x == b.x:
        raise GeometryPreconditionError("vertical line has no single crossing with x = const")
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)


def crossing_x(a: Pt, b: Pt, y: Fraction) -> Fraction:
    if a.y == b.y:
        raise GeometryPreconditionError("horizontal line has no single crossing with y = const")
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y)


def segment_intersection(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> Union[None, Pt, Seg]:
    """Intersection of closed segments p1p2 and q1q2: None, a point, or an overlap."""
    r = Pt(p2.x - p1.x, p2.y - p1.y)
    s = Pt(q2.x - q1.x, q2.y - q1.y)
    denom = r.x * s.y - r.y * s.x
    qp = Pt(q1.x - p1.x, q1.y - p1.y)
    if denom != 0:
        t = (qp.x * s.y - qp.y * s.x) / denom
        w = (qp.x * r.y - qp.y * r.x) / denom
        if 0 <= t <= 1 and 0 <= w <= 1:
            return Pt(p1.x + t * r.x, p1.y + t * r.y)
        return None
    if qp.x * r.y - qp.y * r.x != 0:
        return None
    # collinear: compare along the dominant axis of p
    key = (lambda p: p.x) if r.x != 0 else (lambda p: p.y)
    a_lo, a_hi = sorted((p1, p2), key=key)
    b_lo, b_hi = sorted((q1, q2), key=key)
    lo = a_lo if key(a_lo) >= key(b_lo) else b_lo
    hi = a_hi if key(a_hi) <= key(b_hi) else b_hi
    if key(lo) > key(hi):
        return None
    if key(lo) == key(hi):
        return lo
    return Seg(lo, hi)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator strictly between lo and hi.

    Walks the continued fraction expansion of the interval, so the result
    stays small no matter how large the endpoints' denominators are.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise GeometryPreconditionError(f"empty interval ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    whole = math.floor(lo)
    if whole + 1 < hi:
        return Fraction(whole + 1)
    if lo == whole:
        # (n, n + t) with t <= 1: n + 1/m for the least m with 1/m < t
        return whole + Fraction(1, math.floor(1 / (hi - whole)) + 1)
    return whole + 1 / simplest_between(1 / (hi - whole), 1 / (lo - whole))


@dataclass(frozen=True)
class Line:
    """Line through two distinct points, kept in two-point form."""

    p: Pt
    q: Pt

    def y_at(self, x: Fraction) -> Fraction:
        return crossing_y(self.p, self.q, x)


@dataclass(frozen=True)
class VisRegion:
    """Points of `host` seen from `apex` through the shared segment `seg`.

    For a vertical `seg` the delimiting lines pass through its bottom
    (lower_line) and top (upper_line) endpoints; for a horizontal one
    through its left and right endpoints.
    """

    host: Rect
    apex: Pt
    seg: Seg
    lower_line: Line
    upper_line: Line
    diverging: bool

    def crossing(self, q: Pt) -> Optional[Fraction]:
        """Coordinate along `seg` where apex->q meets its supporting line."""
        a = self.apex
        if self.seg.vertical:
            e = self.seg.a.x
            if (q.x - e) * (a.x - e) >= 0:
                return None
            return crossing_y(a, q, e)
        e = self.seg.a.y
        if (q.y - e) * (a.y - e) >= 0:
            return None
        return crossing_x(a, q, e)

    def _span(self) -> Interval:
        if self.seg.vertical:
            return self.seg.y_lo, self.seg.y_hi
        return self.seg.x_lo, self.seg.x_hi

    def contains(self, q: Pt) -> bool:
        """Open membership: q inside host and apex->q crosses the interior of seg."""
        if not self.host.contains(q):
            return False
        c = self.crossing(q)
        if c is None:
            return False
        lo, hi = self._span()
        return lo < c < hi

    def contains_closed(self, q: Pt) -> bool:
        if not self.host.contains(q):
            return False
        c = self.crossing(q)
        if c is None:
            return False
        lo, hi = self._span()
        return lo <= c <= hi


def _require_inside(p: Pt, u: Rect) -> None:
    if not u.contains_strictly(p):
        raise GeometryPreconditionError(
            f"apex ({p.x}, {p.y}) is not strictly inside rect {u.id!r}"
        )


def _require_seg(u: Rect, v: Rect) -> Seg:
    seg = seg_common(u, v)
    if seg is None:
        raise GeometryPreconditionError(f"rects {u.id!r} and {v.id!r} are not adjacent")
    return seg


def visibility_region(p: Pt, u: Rect, v: Rect) -> VisRegion:
    """vis(u, v) for the vertex of u placed at p."""
    _require_inside(p, u)
    seg = _require_seg(u, v)
    lo_end, hi_end = (seg.a, seg.b)
    lower, upper = Line(p, lo_end), Line(p, hi_end)
    if seg.vertical:
        diverging = seg.y_lo <= p.y <= seg.y_hi
    else:
        diverging = seg.x_lo <= p.x <= seg.x_hi
    return VisRegion(v, p, seg, lower, upper, diverging)


def _vertical_pair(p: Pt, u: Rect, v: Rect) -> Tuple[VisRegion, Fraction]:
    """Region and x of the shared side for u vertically adjacent and left of v."""
    vis = visibility_region(p, u, v)
    if not vis.seg.vertical or u.x2 != v.x1:
        raise GeometryPreconditionError(f"{u.id!r} is not the left neighbour of {v.id!r}")
    return vis, v.x1


def _reach(e: Fraction, s: Fraction, apex: Pt, target: Fraction) -> Fraction:
    """Smallest x >= e at which the line from apex through (e, s) has y == target."""
    return e + (target - s) * (e - apex.x) / (s - apex.y)


def blind_segment(p: Pt, u: Rect, v: Rect) -> Optional[Seg]:
    """Closure of the component of R(v) outside vis(u, v) at the far end.

    Top component when p is above [u,v], bottom component when below.
    Returns all of R(v) when the delimiting line clears it entirely.
    """
    vis, e = _vertical_pair(p, u, v)
    if vis.diverging:
        raise GeometryPreconditionError(f"{u.id!r} is a diverging neighbour of {v.id!r}")
    x = v.x2
    if p.y > vis.seg.y_hi:
        edge = vis.upper_line.y_at(x)
        lo = max(edge, v.y1)
        if lo >= v.y2:
            return None
        return Seg(Pt(x, lo), Pt(x, v.y2))
    edge = vis.lower_line.y_at(x)
    hi = min(edge, v.y2)
    if hi <= v.y1:
        return None
    return Seg(Pt(x, v.y1), Pt(x, hi))


def min_stretch_horizontal(p: Pt, u: Rect, v: Rect, g: Gate, orientation: str) -> Fraction:
    """Least common x2 for u and v after which g lies in vis(u, v).

    orientation is "u-above" (u on top of v) or "u-below" (mirror).
    """
    _require_inside(p, u)
    if u.x2 != v.x2:
        raise GeometryPreconditionError(
            f"{u.id!r} and {v.id!r} must share their right edge ({u.x2} != {v.x2})"
        )
    seg = _require_seg(u, v)
    if not seg.horizontal:
        raise GeometryPreconditionError(f"{u.id!r} and {v.id!r} are not horizontally adjacent")
    if orientation not in ("u-above", "u-below"):
        raise ValueError(f"unknown orientation {orientation!r}")
    if (orientation == "u-above") != (u.y1 == v.y2):
        raise GeometryPreconditionError(f"{u.id!r} is not {orientation.replace('u-', '')} {v.id!r}")
    e, y = seg.x_lo, seg.a.y
    if p.x >= e:
        return v.x2
    if orientation == "u-above":
        if g.y_lo >= y:
            return v.x2
        return max(v.x2, e + (y - g.y_lo) * (e - p.x) / (p.y - y))
    if g.y_hi <= y:
        return v.x2
    return max(v.x2, e + (g.y_hi - y) * (e - p.x) / (y - p.y))


def min_stretch_diverging(
    p: Pt, u: Rect, v: Rect, target: Optional[Gate] = None
) -> Fraction:
    """Least x2(v) after which R(v) (or only `target`) lies in vis(u, v)."""
    vis, e = _vertical_pair(p, u, v)
    if not vis.diverging:
        raise GeometryPreconditionError(f"{u.id!r} is not a diverging neighbour of {v.id!r}")
    t_lo, t_hi = (v.y1, v.y2) if target is None else (target.y_lo, target.y_hi)
    s_lo, s_hi = vis.seg.y_lo, vis.seg.y_hi
    x = v.x2
    if t_hi > s_hi:
        if s_hi == p.y:
            raise GeometryPreconditionError("flat upper line never reaches the target")
        x = max(x, _reach(e, s_hi, p, t_hi))
    if t_lo < s_lo:
        if s_lo == p.y:
            raise GeometryPreconditionError("flat lower line never reaches the target")
        x = max(x, _reach(e, s_lo, p, t_lo))
    logger.debug("diverging %s->%s: X = %s", u.id, v.id, x)
    return x


def min_stretch_nondiverging(p: Pt, u: Rect, v: Rect, g: Gate) -> Fraction:
    """Least x2(v) after which g meets blind(u, v) and clears the far delimiting line."""
    vis, e = _vertical_pair(p, u, v)
    if vis.diverging:
        raise GeometryPreconditionError(f"{u.id!r} is a diverging neighbour of {v.id!r}")
    s_lo, s_hi = vis.seg.y_lo, vis.seg.y_hi
    x = v.x2
    if p.y > s_hi:
        if g.y_hi < s_hi:
            x = max(x, _reach(e, s_hi, p, g.y_hi))
        if g.y_lo < s_lo:
            x = max(x, _reach(e, s_lo, p, g.y_lo))
    else:
        if g.y_lo > s_lo:
            x = max(x, _reach(e, s_lo, p, g.y_lo))
        if g.y_hi > s_hi:
            x = max(x, _reach(e, s_hi, p, g.y_hi))
    logger.debug("non-diverging %s->%s: X = %s", u.id, v.id, x)
    return x


def gate_meets_blind(p: Pt, u: Rect, v: Rect, g: Gate) -> bool:
    blind = blind_segment(p, u, v)
    if blind is None:
        return False
    return g.y_lo <= blind.y_hi and blind.y_lo <= g.y_hi


def gate_reaches_blind(p: Pt, u: Rect, v: Rect, g: Gate) -> bool:
    """g meets blind(u, v) or lies past it, beyond the blind end of R(v)."""
    vis, _ = _vertical_pair(p, u, v)
    if vis.diverging:
        raise GeometryPreconditionError(f"{u.id!r} is a diverging neighbour of {v.id!r}")
    if p.y > vis.seg.y_hi:
        return g.y_hi >= vis.upper_line.y_at(v.x2)
    return g.y_lo <= vis.lower_line.y_at(v.x2)


def boundary_shift_nondiverging(p: Pt, u: Rect, v: Rect, g: Gate) -> Fraction:
    """New y2(v) (p above [u,v]) or y1(v) (p below) that brings g into vis(u, v).

    g may also sit wholly beyond the blind end of R(v); the shift then pulls
    that end past it. The simplest rational in the open interval of feasible
    values is returned.
    """
    vis, e = _vertical_pair(p, u, v)
    if vis.diverging:
        raise GeometryPreconditionError(f"{u.id!r} is a diverging neighbour of {v.id!r}")
    if not gate_reaches_blind(p, u, v, g):
        raise GeometryPreconditionError(
            f"gate of {v.id!r} does not meet blind({u.id}, {v.id}); stretch first"
        )
    d = (v.x2 - e) / (e - p.x)
    if p.y > vis.seg.y_hi:
        bound = max(v.y2, (g.y_hi + d * p.y) / (1 + d))
        if not bound < p.y:
            raise GeometryPreconditionError("no feasible top boundary below the apex")
        return simplest_between(bound, p.y)
    bound = min(v.y1, (g.y_lo + d * p.y) / (1 + d))
    if not p.y < bound:
        raise GeometryPreconditionError("no feasible bottom boundary above the apex")
    return simplest_between(p.y, bound)
