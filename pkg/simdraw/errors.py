"""Exception hierarchy shared by the simdraw package and the CLI."""

from typing import Optional, Sequence

from models import Pt


class SimDrawError(Exception):
    """Base class for all simdraw errors."""


class InputError(SimDrawError, ValueError):
    """The input file or object is not a valid instance."""


class SyntaxInputError(InputError):
    pass


class OverlapError(InputError):
    def __init__(self, a: str, b: str):
        super().__init__(f"rectangles {a!r} and {b!r} overlap")
        self.ids = (a, b)


class CoverageError(InputError):
    def __init__(self, message: str, point: Optional[Pt] = None):
        super().__init__(message)
        self.point = point


class FourCornerError(InputError):
    def __init__(self, point: Pt, ids: Sequence[str]):
        super().__init__(
            f"four rectangles meet at ({point.x}, {point.y}): {', '.join(sorted(ids))}"
        )
        self.point = point
        self.ids = tuple(sorted(ids))


class PoleNameError(InputError):
    pass


class DrawingFormatError(InputError):
    pass


class GeometryPreconditionError(SimDrawError, ValueError):
    """A geometry routine was called outside its domain."""


class ConstructionError(SimDrawError, RuntimeError):
    """An invariant of the inductive construction does not hold."""

    def __init__(self, message: str, step: Optional[int] = None):
        prefix = f"step {step}: " if step is not None else ""
        super().__init__(prefix + message)
        self.step = step
