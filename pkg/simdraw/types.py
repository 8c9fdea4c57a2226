"""Shared types for the simdraw package."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx

from models import Gate, Pt, Rect, SimDrawing, Subdivision, VerificationReport


@dataclass
class StDigraph:
    """G^R: red edges plus the four pole edges, embedded in the plane."""

    vertices: List[str]
    edges: List[Tuple[str, str]]
    embedding: nx.PlanarEmbedding
    source: str
    sink: str


@dataclass(frozen=True)
class Face:
    """An internal face, bounded by two directed paths from its source to its sink."""

    id: str
    left: Tuple[str, ...]
    right: Tuple[str, ...]


@dataclass
class FacePlan:
    faces: Dict[str, Face]
    dual: nx.DiGraph
    order: List[str]
    outer: Tuple[Tuple[str, ...], Tuple[str, ...]] = ((), ())

    @property
    def k(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class StepFaces:
    """One entry of the subgraph sequence: the face added at step `index`."""

    index: int
    face: str
    left: Tuple[str, ...]
    right: Tuple[str, ...]
    # right boundary of the placed subgraph before the step, bottom to top
    stack: Tuple[str, ...]

    @property
    def new(self) -> Tuple[str, ...]:
        return self.right[1:-1]


@dataclass
class LayoutState:
    """D_i and the placed part of the drawing."""

    rects: Dict[str, Rect] = field(default_factory=dict)
    positions: Dict[str, Pt] = field(default_factory=dict)
    # ids sharing the current right edge, bottom to top
    stack: List[str] = field(default_factory=list)
    step: int = 0

    @property
    def right_edge(self) -> Fraction:
        return self.rects[self.stack[0]].x2

    def put(self, r: Rect) -> None:
        self.rects[r.id] = r

    def drawing(self, meta: Optional[dict] = None) -> SimDrawing:
        order = sorted(self.rects.values(), key=lambda r: (r.y1, r.x1, r.id))
        return SimDrawing(rects=order, positions=dict(self.positions), meta=dict(meta or {}))


@dataclass
class StepPlan:
    """Everything decided for one induction step."""

    step: int
    left: Tuple[str, ...]
    right: Tuple[str, ...]
    # x of the notch's left side and current x2 of the new rects
    x_left: Fraction
    x_right: Fraction
    # bounds[0] < ... < bounds[b]: bottom of v_1, shared boundaries, top of v_b
    bounds: List[Fraction]
    # per new vertex: first and last index (1-based into `left`) of its u-neighbours
    ranges: Dict[str, Tuple[int, int]]
    gates: Dict[str, Gate] = field(default_factory=dict)
    thresholds: Dict[Tuple[str, str], Fraction] = field(default_factory=dict)
    shifts: Dict[Tuple[str, str], Fraction] = field(default_factory=dict)
    stretch: Optional[Fraction] = None

    @property
    def a(self) -> int:
        return len(self.left)

    @property
    def new(self) -> Tuple[str, ...]:
        return self.right[1:-1]

    def is_critical(self, v: str) -> bool:
        lo, hi = self.ranges[v]
        return hi > lo

    def rect_of(self, q: int) -> Rect:
        """Current rect of the q-th new vertex (0-based)."""
        return Rect(self.new[q], self.x_left, self.bounds[q], self.x_right, self.bounds[q + 1])


@dataclass(frozen=True)
class StepSnapshot:
    """Read-only view handed to the step hook after each induction step."""

    step: int
    face: str
    rects: Tuple[Rect, ...]
    positions: Tuple[Tuple[str, Pt], ...]
    gates: Tuple[Gate, ...]

    def drawing(self) -> SimDrawing:
        return SimDrawing(rects=list(self.rects), positions=dict(self.positions), meta={"step": self.step})


@dataclass
class VerifyContext:
    """Inputs and the report shared by all verification checks."""

    source: Subdivision
    drawing: SimDrawing
    report: VerificationReport = field(default_factory=VerificationReport)

    # {a, b} -> "horizontal" | "vertical" for source and drawing
    source_adjacency: Dict[frozenset, str] = field(default_factory=dict)
    drawing_adjacency: Dict[frozenset, str] = field(default_factory=dict)
