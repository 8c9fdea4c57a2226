"""
models.py: Data models for simdraw
"""
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

POLE_NAMES = ("v_S", "v_N", "v_W", "v_E")

# exact coordinates can outgrow the default int->str digit cap
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def rat(value: RatLike) -> Fraction:
    """Exact rational from an int, a Fraction, or a decimal / `p/q` literal."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, float):
        # floats only reach here from hand-written callers; go through repr
        return Fraction(repr(value))
    return Fraction(value)


def rat_str(value: Fraction) -> str:
    """`p/q` text for an exact value (`p` alone for integers)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Pt:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: RatLike, y: RatLike) -> "Pt":
        return Pt(rat(x), rat(y))


@dataclass(frozen=True)
class Seg:
    a: Pt
    b: Pt

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment at ({self.a.x}, {self.a.y})")

    @property
    def vertical(self) -> bool:
        return self.a.x == self.b.x

    @property
    def horizontal(self) -> bool:
        return self.a.y == self.b.y

    @property
    def y_lo(self) -> Fraction:
        return min(self.a.y, self.b.y)

    @property
    def y_hi(self) -> Fraction:
        return max(self.a.y, self.b.y)

    @property
    def x_lo(self) -> Fraction:
        return min(self.a.x, self.b.x)

    @property
    def x_hi(self) -> Fraction:
        return max(self.a.x, self.b.x)


@dataclass(frozen=True)
class Rect:
    id: str
    x1: Fraction
    y1: Fraction
    x2: Fraction
    y2: Fraction

    def __post_init__(self):
        if not (self.x1 < self.x2 and self.y1 < self.y2):
            raise ValueError(
                f"rect {self.id!r} is empty: [{self.x1}, {self.y1}, {self.x2}, {self.y2}]"
            )

    @staticmethod
    def of(rid: str, x1: RatLike, y1: RatLike, x2: RatLike, y2: RatLike) -> "Rect":
        return Rect(rid, rat(x1), rat(y1), rat(x2), rat(y2))

    @property
    def width(self) -> Fraction:
        return self.x2 - self.x1

    @property
    def height(self) -> Fraction:
        return self.y2 - self.y1

    @property
    def area(self) -> Fraction:
        return self.width * self.height

    @property
    def center(self) -> Pt:
        return Pt((self.x1 + self.x2) / 2, (self.y1 + self.y2) / 2)

    def sides(self) -> List[Seg]:
        bl, br = Pt(self.x1, self.y1), Pt(self.x2, self.y1)
        tl, tr = Pt(self.x1, self.y2), Pt(self.x2, self.y2)
        return [Seg(bl, br), Seg(br, tr), Seg(tl, tr), Seg(bl, tl)]

    def corners(self) -> List[Pt]:
        return [
            Pt(self.x1, self.y1),
            Pt(self.x2, self.y1),
            Pt(self.x2, self.y2),
            Pt(self.x1, self.y2),
        ]

    def contains_strictly(self, p: Pt) -> bool:
        return self.x1 < p.x < self.x2 and self.y1 < p.y < self.y2

    def contains(self, p: Pt) -> bool:
        return self.x1 <= p.x <= self.x2 and self.y1 <= p.y <= self.y2

    def moved(self, **coords: Fraction) -> "Rect":
        return replace(self, **coords)

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x1, self.y1, self.x2, self.y2)


@dataclass(frozen=True)
class Gate:
    """A y-interval on the right side of `owner`; its x is the owner's current x2."""

    owner: str
    y_lo: Fraction
    y_hi: Fraction

    def __post_init__(self):
        if not self.y_lo < self.y_hi:
            raise ValueError(f"gate of {self.owner!r} is empty: [{self.y_lo}, {self.y_hi}]")

    def strictly_inside(self, r: Rect) -> bool:
        return r.y1 < self.y_lo and self.y_hi < r.y2


@dataclass(frozen=True)
class Subdivision:
    bounds: Rect
    rects: Tuple[Rect, ...]

    def by_id(self) -> Dict[str, Rect]:
        return {r.id: r for r in self.rects}

    @property
    def ids(self) -> List[str]:
        return [r.id for r in self.rects]

    def __len__(self) -> int:
        return len(self.rects)


@dataclass
class LabeledGraph:
    """Primal graph of a subdivision with its regular edge labeling.

    red: horizontal adjacencies oriented bottom -> top.
    blue: vertical adjacencies oriented left -> right.
    rotation: neighbours of each vertex in counterclockwise order.
    """

    vertices: List[str]
    red: List[Tuple[str, str]] = field(default_factory=list)
    blue: List[Tuple[str, str]] = field(default_factory=list)
    rotation: Dict[str, List[str]] = field(default_factory=dict)
    poles: Dict[str, Optional[str]] = field(default_factory=dict)

    def color_of(self, a: str, b: str) -> Optional[Tuple[str, bool]]:
        """("red"|"blue", outgoing-from-a) for the edge a-b, None if absent."""
        for color, edges in (("red", self.red), ("blue", self.blue)):
            if (a, b) in edges:
                return color, True
            if (b, a) in edges:
                return color, False
        return None

    def adjacency_types(self) -> Dict[frozenset, str]:
        types = {frozenset(e): "horizontal" for e in self.red}
        types.update({frozenset(e): "vertical" for e in self.blue})
        return types


@dataclass
class SimDrawing:
    rects: List[Rect]
    positions: Dict[str, Pt]
    meta: Dict[str, Any] = field(default_factory=dict)

    def by_id(self) -> Dict[str, Rect]:
        return {r.id: r for r in self.rects}


@dataclass
class Violation:
    check: str
    message: str
    ids: Tuple[str, ...] = ()
    point: Optional[Pt] = None


@dataclass
class VerificationReport:
    checks: Dict[str, bool] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, violation: Violation) -> None:
        self.violations.append(violation)
        self.checks[violation.check] = False

    def for_check(self, name: str) -> List[Violation]:
        return [v for v in self.violations if v.check == name]


@dataclass
class DrawConfig:
    notch_width: int = 1
    stretch_margin: int = 1
    pole_thickness: int = 1
    base_box: int = 1
    check_steps: bool = False


@dataclass
class RenderOptions:
    scale: float = 40.0
    precision: int = 3
    rects: bool = True
    labels: bool = True
    edges: bool = True
    gates: bool = False
    wedges: bool = False

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        if not self.scale > 0:
            raise ValueError("scale must be positive")
