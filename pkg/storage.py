"""
storage.py: File persistence for simdraw
"""
import json
import logging
from dataclasses import asdict, fields
from pathlib import Path
from typing import Optional, Tuple, Union

from models import (
    DrawConfig,
    LabeledGraph,
    Pt,
    Rect,
    RenderOptions,
    SimDrawing,
    Subdivision,
    rat,
    rat_str,
)
from simdraw.errors import DrawingFormatError
from simdraw.subdivision import parse, serialize
from simdraw.types import FacePlan

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"
CONFIG_FILE = DATA_DIR / "config.json"
SAMPLE_FILE = DATA_DIR / "pin5.rsub"

PathLike = Union[str, Path]


def _write_text(path: PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _dec(value) -> str:
    """Decimal mirror of an exact value, 10 significant digits."""
    return f"{float(value):.10g}"


# ---------------------------------------------------------------------------
# .rsub
# ---------------------------------------------------------------------------


def load_rsub(path: PathLike) -> Subdivision:
    """Read and validate a subdivision file."""
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    return parse(text)


def save_rsub(sub: Subdivision, path: PathLike) -> None:
    _write_text(path, serialize(sub))
    logger.info(f"Wrote {len(sub)} rects to {path}")


# ---------------------------------------------------------------------------
# .draw
# ---------------------------------------------------------------------------


def _rect_to_dict(r: Rect) -> dict:
    doc = {"id": r.id}
    for key, value in zip(("x1", "y1", "x2", "y2"), r.as_tuple()):
        doc[key] = rat_str(value)
        doc[f"{key}_dec"] = _dec(value)
    return doc


def _dict_to_rect(d: dict) -> Rect:
    return Rect(d["id"], rat(d["x1"]), rat(d["y1"]), rat(d["x2"]), rat(d["y2"]))


def drawing_to_dict(d: SimDrawing) -> dict:
    rects = sorted(d.rects, key=lambda r: (r.y1, r.x1, r.id))
    return {
        "rects": [_rect_to_dict(r) for r in rects],
        "vertices": [
            {
                "id": vid,
                "x": rat_str(p.x),
                "y": rat_str(p.y),
                "x_dec": _dec(p.x),
                "y_dec": _dec(p.y),
            }
            for vid, p in sorted(d.positions.items())
        ],
        "meta": dict(d.meta),
    }


def dict_to_drawing(doc: dict) -> SimDrawing:
    try:
        rects = [_dict_to_rect(r) for r in doc["rects"]]
        positions = {v["id"]: Pt(rat(v["x"]), rat(v["y"])) for v in doc["vertices"]}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DrawingFormatError(f"malformed drawing: {exc!r}") from exc
    return SimDrawing(rects=rects, positions=positions, meta=dict(doc.get("meta", {})))


def dumps_drawing(d: SimDrawing) -> str:
    return _dumps(drawing_to_dict(d))


def save_drawing(d: SimDrawing, path: PathLike) -> None:
    """Write a drawing; byte-identical for identical drawings."""
    _write_text(path, dumps_drawing(d))
    logger.info(f"Wrote drawing with {len(d.rects)} rects to {path}")


def load_drawing(path: PathLike) -> SimDrawing:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingFormatError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DrawingFormatError(f"{path}: top level must be an object")
    return dict_to_drawing(doc)


# ---------------------------------------------------------------------------
# Debug dumps
# ---------------------------------------------------------------------------


def graph_to_dict(g: LabeledGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "red": [list(e) for e in g.red],
        "blue": [list(e) for e in g.blue],
        "poles": dict(g.poles),
    }


def plan_to_dict(plan: FacePlan) -> dict:
    return {
        "order": list(plan.order),
        "faces": {
            fid: {"left": list(plan.faces[fid].left), "right": list(plan.faces[fid].right)}
            for fid in plan.order
        },
        "outer": {"left": list(plan.outer[0]), "right": list(plan.outer[1])},
    }


def save_json(doc: dict, path: Optional[PathLike]) -> str:
    """Write a dump to path (when given) and return its text."""
    text = _dumps(doc)
    if path is not None:
        _write_text(path, text)
    return text


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------


def _from_section(cls, section: dict):
    known = {f.name for f in fields(cls)}
    return cls(**{k: v for k, v in section.items() if k in known})


def load_config(path: Optional[PathLike] = None) -> Tuple[DrawConfig, RenderOptions]:
    """Load construction and render settings. Falls back to defaults."""
    path = Path(path) if path is not None else CONFIG_FILE
    if not path.exists():
        if path != CONFIG_FILE:
            logger.warning(f"Config file {path} not found, using defaults")
        return DrawConfig(), RenderOptions()
    try:
        with open(path, "r", encoding="utf-8") as f:
            d = json.load(f)
        return (
            _from_section(DrawConfig, d.get("draw", {})),
            _from_section(RenderOptions, d.get("render", {})),
        )
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError, ValueError) as exc:
        logger.warning(f"Config file {path} is unreadable ({exc}), using defaults")
        return DrawConfig(), RenderOptions()


def save_config(draw: DrawConfig, render: RenderOptions, path: Optional[PathLike] = None) -> None:
    _write_text(path or CONFIG_FILE, _dumps({"draw": asdict(draw), "render": asdict(render)}))

