"""Output rects must form a valid rectangular subdivision of their bounding box."""

from models import Subdivision
from simdraw.checks.base import Check
from simdraw.errors import InputError
from simdraw.subdivision import bounding_box, validate
from simdraw.types import VerifyContext


class SubdivisionValidityCheck(Check):
    name = "subdivision"
    description = "rects tile their bounding box, no four share a corner"

    def run(self, context: VerifyContext) -> None:
        rects = context.drawing.rects
        if not rects:
            self.flag(context, "drawing has no rectangles")
            return
        try:
            validate(Subdivision(bounding_box(rects), tuple(rects)))
        except InputError as exc:
            ids = tuple(getattr(exc, "ids", ()))
            point = getattr(exc, "point", None)
            self.flag(context, str(exc), ids, point)
