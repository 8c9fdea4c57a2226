"""
svg_export.py: SVG 1.1 rendering of drawings and construction steps
"""
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape

from models import Gate, Pt, RenderOptions, SimDrawing
from simdraw.geometry import seg_common
from simdraw.subdivision import adjacencies
from simdraw.types import StepSnapshot

logger = logging.getLogger(__name__)

PAD = 10
DOT_RADIUS = 3

HEADER = (
    '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
    '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
    '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
)

RECT_STYLE = 'fill="#f5f5f5" stroke="#333333" stroke-width="1"'
EDGE_STYLE = 'stroke="#1f4e99" stroke-width="1.5"'
GATE_STYLE = 'stroke="#d62728" stroke-width="3"'
WEDGE_STYLE = 'fill="#2ca02c" fill-opacity="0.15" stroke="none"'


class _Canvas:
    """Maps drawing coordinates to SVG user units with y pointing up."""

    def __init__(self, drawing: SimDrawing, options: RenderOptions):
        self.scale = options.scale
        self.precision = options.precision
        xs = [r.x1 for r in drawing.rects] + [r.x2 for r in drawing.rects]
        ys = [r.y1 for r in drawing.rects] + [r.y2 for r in drawing.rects]
        xs += [p.x for p in drawing.positions.values()]
        ys += [p.y for p in drawing.positions.values()]
        if xs:
            self.min_x, self.max_x = float(min(xs)), float(max(xs))
            self.min_y, self.max_y = float(min(ys)), float(max(ys))
        else:
            self.min_x = self.max_x = self.min_y = self.max_y = 0.0
        self.width = (self.max_x - self.min_x) * self.scale + 2 * PAD
        self.height = (self.max_y - self.min_y) * self.scale + 2 * PAD

    def num(self, value: float) -> str:
        return f"{value:.{self.precision}f}"

    def x(self, value) -> str:
        return self.num((float(value) - self.min_x) * self.scale + PAD)

    def y(self, value) -> str:
        return self.num((self.max_y - float(value)) * self.scale + PAD)

    def length(self, value) -> str:
        return self.num(float(value) * self.scale)

    def points(self, pts: Iterable[Pt]) -> str:
        return " ".join(f"{self.x(p.x)},{self.y(p.y)}" for p in pts)


def _edges(drawing: SimDrawing) -> List[Tuple[str, str]]:
    pos = drawing.positions
    return sorted(
        tuple(sorted(pair))
        for pair in adjacencies(drawing.rects)
        if all(v in pos for v in pair)
    )


def _wedges(drawing: SimDrawing, c: _Canvas) -> List[str]:
    """Triangle from each vertex to the segment it shares with each neighbour."""
    by_id = drawing.by_id()
    out = []
    for a, b in _edges(drawing):
        seg = seg_common(by_id[a], by_id[b])
        for apex in (a, b):
            pts = [drawing.positions[apex], seg.a, seg.b]
            out.append(f'<polygon class="wedge" points="{c.points(pts)}" {WEDGE_STYLE}/>')
    return out


def render_svg(
    drawing: SimDrawing,
    options: Optional[RenderOptions] = None,
    gates: Sequence[Gate] = (),
) -> str:
    """SVG document for a drawing. Gates are drawn on their owner's right side."""
    options = options or RenderOptions()
    c = _Canvas(drawing, options)
    by_id = drawing.by_id()
    body: List[str] = []

    if options.rects:
        body.append('<g id="rects">')
        for r in sorted(drawing.rects, key=lambda r: (r.y1, r.x1, r.id)):
            body.append(
                f'<rect id="rect-{escape(r.id)}" x="{c.x(r.x1)}" y="{c.y(r.y2)}" '
                f'width="{c.length(r.width)}" height="{c.length(r.height)}" {RECT_STYLE}/>'
            )
        body.append("</g>")

    if options.wedges:
        body.append('<g id="wedges">')
        body.extend(_wedges(drawing, c))
        body.append("</g>")

    if options.edges:
        body.append('<g id="edges">')
        for a, b in _edges(drawing):
            p, q = drawing.positions[a], drawing.positions[b]
            body.append(
                f'<line class="edge" x1="{c.x(p.x)}" y1="{c.y(p.y)}" '
                f'x2="{c.x(q.x)}" y2="{c.y(q.y)}" {EDGE_STYLE}/>'
            )
        body.append("</g>")

    if options.gates and gates:
        body.append('<g id="gates">')
        for g in gates:
            x = by_id[g.owner].x2
            body.append(
                f'<line class="gate" x1="{c.x(x)}" y1="{c.y(g.y_lo)}" '
                f'x2="{c.x(x)}" y2="{c.y(g.y_hi)}" {GATE_STYLE}/>'
            )
        body.append("</g>")

    body.append('<g id="vertices">')
    for vid, p in sorted(drawing.positions.items()):
        body.append(f'<circle class="vertex" cx="{c.x(p.x)}" cy="{c.y(p.y)}" r="{DOT_RADIUS}" fill="#000000"/>')
    body.append("</g>")

    if options.labels:
        body.append('<g id="labels" font-family="monospace" font-size="10" fill="#555555">')
        for vid, p in sorted(drawing.positions.items()):
            body.append(f'<text x="{c.x(p.x)}" y="{c.y(p.y)}" dx="4" dy="-4">{escape(vid)}</text>')
        body.append("</g>")

    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{c.num(c.width)}" height="{c.num(c.height)}" '
        f'viewBox="0 0 {c.num(c.width)} {c.num(c.height)}">'
    )
    return HEADER + "\n".join([head, *body, "</svg>"]) + "\n"


def render_snapshot(snapshot: StepSnapshot, options: Optional[RenderOptions] = None) -> str:
    """One construction step, pole frame included, with that step's gates."""
    return render_svg(snapshot.drawing(), options, gates=snapshot.gates)


def save_svg(text: str, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote SVG to {path}")
