"""Each vertex lies strictly inside its own rectangle."""

from simdraw.checks.base import Check
from simdraw.types import VerifyContext


class ContainmentCheck(Check):
    name = "containment"
    description = "every vertex strictly inside its rect"

    def run(self, context: VerifyContext) -> None:
        by_id = context.drawing.by_id()
        positions = context.drawing.positions
        for rid, r in by_id.items():
            p = positions.get(rid)
            if p is None:
                self.flag(context, f"rect {rid} has no vertex", (rid,))
            elif not r.contains_strictly(p):
                self.flag(context, f"vertex {rid} at ({p.x}, {p.y}) is not inside its rect", (rid,), p)
        for vid in sorted(set(positions) - set(by_id)):
            self.flag(context, f"vertex {vid} has no rect", (vid,))
