"""Simultaneous drawing package: public API."""

from simdraw.engine import run
from simdraw.subdivision import augment_boundary, derive_primal, parse, serialize, validate_rel
from simdraw.verify import naive_crossing_oracle, verify

__all__ = [
    "run",
    "parse",
    "serialize",
    "derive_primal",
    "augment_boundary",
    "validate_rel",
    "verify",
    "naive_crossing_oracle",
]
