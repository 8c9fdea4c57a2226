"""Each edge crosses the rect boundaries once, inside the shared segment."""

from typing import Dict, Iterable, List, Tuple

from models import Pt, Rect, Violation
from simdraw.checks.base import Check
from simdraw.geometry import crossing_x, crossing_y, seg_common
from simdraw.types import VerifyContext


def crossing_violations(
    by_id: Dict[str, Rect],
    positions: Dict[str, Pt],
    pairs: Iterable[Tuple[str, str]],
    check: str = "crossing",
) -> List[Violation]:
    """Edges whose segment leaves its two rects anywhere but the open shared segment.

    With both endpoints strictly inside their rects, the segment meets the
    boundary union exactly once iff it meets the supporting line of [a,b]
    inside the open segment.
    """
    out: List[Violation] = []
    for a, b in pairs:
        ra, rb = by_id[a], by_id[b]
        pa, pb = positions.get(a), positions.get(b)
        if pa is None or pb is None:
            out.append(Violation(check, f"edge {a}-{b} is missing an endpoint", (a, b)))
            continue
        if not (ra.contains_strictly(pa) and rb.contains_strictly(pb)):
            out.append(Violation(check, f"edge {a}-{b} starts outside its rects", (a, b)))
            continue
        seg = seg_common(ra, rb)
        if seg is None:
            out.append(Violation(check, f"rects {a} and {b} are not adjacent", (a, b)))
            continue
        if seg.vertical:
            e = seg.a.x
            if (pa.x - e) * (pb.x - e) >= 0:
                out.append(Violation(check, f"edge {a}-{b} does not cross x = {e}", (a, b)))
                continue
            c = Pt(e, crossing_y(pa, pb, e))
            inside = seg.y_lo < c.y < seg.y_hi
        else:
            e = seg.a.y
            if (pa.y - e) * (pb.y - e) >= 0:
                out.append(Violation(check, f"edge {a}-{b} does not cross y = {e}", (a, b)))
                continue
            c = Pt(crossing_x(pa, pb, e), e)
            inside = seg.x_lo < c.x < seg.x_hi
        if not inside:
            out.append(
                Violation(check, f"edge {a}-{b} crosses at ({c.x}, {c.y}), outside [{a},{b}]", (a, b), c)
            )
    return out


class SingleCrossingCheck(Check):
    name = "crossing"
    description = "every edge crosses exactly one boundary point, inside [u,v]"

    def run(self, context: VerifyContext) -> None:
        by_id = context.drawing.by_id()
        pairs = sorted(tuple(sorted(p)) for p in context.drawing_adjacency)
        for v in crossing_violations(by_id, context.drawing.positions, pairs, self.name):
            context.report.add(v)
