"""Abstract base class for all verification checks."""

from abc import ABC, abstractmethod
from typing import Optional, Tuple

from models import Pt, Violation
from simdraw.types import VerifyContext


class Check(ABC):
    """One property of a drawing, judged from the source and the drawing alone.

    Subclasses set `name` (used by --skip and in reports) and a one-line
    `description` shown next to the verdict.
    """

    name: str
    description: str = ""

    @abstractmethod
    def run(self, context: VerifyContext) -> None:
        """Record this check's violations on context.report."""
        ...

    def flag(
        self,
        context: VerifyContext,
        message: str,
        ids: Tuple[str, ...] = (),
        point: Optional[Pt] = None,
    ) -> None:
        """Add a violation under this check's name; marks the check failed."""
        context.report.add(Violation(self.name, message, ids, point))
