"""Input and output have the same adjacencies with the same types."""

from simdraw.checks.base import Check
from simdraw.types import VerifyContext


class ScalingCheck(Check):
    name = "scaling"
    description = "drawing rects are a scaling of the input rects"

    def run(self, context: VerifyContext) -> None:
        src_ids = set(context.source.ids)
        out_ids = set(context.drawing.by_id())
        if src_ids != out_ids:
            self.flag(
                context,
                f"rect ids differ: missing {sorted(src_ids - out_ids)}, extra {sorted(out_ids - src_ids)}",
                tuple(sorted(src_ids ^ out_ids)),
            )
        src, out = context.source_adjacency, context.drawing_adjacency
        for pair in sorted(set(src) | set(out), key=sorted):
            a, b = sorted(pair)
            before, after = src.get(pair), out.get(pair)
            if before == after:
                continue
            if before is None:
                msg = f"{a} and {b} became adjacent ({after})"
            elif after is None:
                msg = f"{a} and {b} are no longer adjacent"
            else:
                msg = f"{a}-{b} changed from {before} to {after}"
            self.flag(context, msg, (a, b))
