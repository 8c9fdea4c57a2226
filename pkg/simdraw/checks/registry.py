"""Check registration and management."""

import logging
from typing import Dict, List

from models import VerificationReport
from simdraw.checks.base import Check
from simdraw.types import VerifyContext

logger = logging.getLogger(__name__)


class CheckRegistry:
    """Ordered set of checks; each can be switched off by name."""

    def __init__(self):
        self._checks: Dict[str, Check] = {}
        self._enabled: Dict[str, bool] = {}

    def register(self, check: Check) -> None:
        if check.name in self._checks:
            raise ValueError(f"check {check.name!r} is already registered")
        self._checks[check.name] = check
        self._enabled[check.name] = True

    def _require(self, name: str) -> None:
        if name not in self._checks:
            raise KeyError(f"unknown check {name!r}; known: {self.list_names()}")

    def enable(self, name: str) -> None:
        self._require(name)
        self._enabled[name] = True

    def disable(self, name: str) -> None:
        self._require(name)
        self._enabled[name] = False

    def is_enabled(self, name: str) -> bool:
        return self._enabled.get(name, False)

    def get_active(self) -> List[Check]:
        return [c for name, c in self._checks.items() if self._enabled.get(name, False)]

    def list_names(self) -> List[str]:
        return list(self._checks.keys())

    def descriptions(self) -> Dict[str, str]:
        return {name: c.description for name, c in self._checks.items()}

    def run_active(self, context: VerifyContext) -> VerificationReport:
        """Run the enabled checks in registration order.

        Every active check gets an entry in report.checks, passing or not;
        skipped checks get none.
        """
        report = context.report
        for check in self.get_active():
            report.checks.setdefault(check.name, True)
            before = len(report.violations)
            check.run(context)
            found = len(report.violations) - before
            if found:
                logger.debug("check %s: %s violation(s)", check.name, found)
            else:
                logger.debug("check %s: ok", check.name)
        return report
