"""Independent checker for simultaneous drawings.

Reads only the input subdivision and the output drawing; nothing here knows
how the drawing was built.
"""

import logging
from typing import Dict, Iterable, Optional, Tuple

from models import Pt, Seg, SimDrawing, Subdivision, VerificationReport
from simdraw.checks import create_default_registry
from simdraw.checks.registry import CheckRegistry
from simdraw.geometry import segment_intersection
from simdraw.subdivision import adjacencies
from simdraw.types import VerifyContext

logger = logging.getLogger(__name__)


def verify(
    source: Subdivision,
    drawing: SimDrawing,
    registry: Optional[CheckRegistry] = None,
) -> VerificationReport:
    """Run every active check and collect the violations."""
    if registry is None:
        registry = create_default_registry()

    context = VerifyContext(source=source, drawing=drawing)
    context.source_adjacency = adjacencies(source.rects)
    context.drawing_adjacency = adjacencies(drawing.rects)

    report = registry.run_active(context)
    if report.passed:
        logger.info("Verification passed")
    else:
        logger.info("Verification failed with %s violation(s)", len(report.violations))
    return report


def naive_crossing_oracle(
    drawing: SimDrawing, edges: Optional[Iterable[Tuple[str, str]]] = None
) -> Dict[Tuple[str, str], int]:
    """Distinct points where each edge segment meets any rect side.

    Edges default to the adjacencies of the drawing's own rects. A collinear
    overlap counts both of its end points.
    """
    if edges is None:
        edges = [tuple(sorted(p)) for p in adjacencies(drawing.rects)]
    sides = [s for r in drawing.rects for s in r.sides()]
    pos = drawing.positions
    counts: Dict[Tuple[str, str], int] = {}
    for a, b in sorted(edges):
        points = set()
        for s in sides:
            hit = segment_intersection(pos[a], pos[b], s.a, s.b)
            if isinstance(hit, Pt):
                points.add(hit)
            elif isinstance(hit, Seg):
                points.update((hit.a, hit.b))
        counts[(a, b)] = len(points)
    return counts
