"""
generator.py: Random rectangular subdivisions for test corpora

Instances are grown from a single rect by guillotine splits. Every cut uses
a coordinate not yet used on its axis, so no four rects ever meet at a
point. With probability `pinwheel` a chosen rect is replaced by a five-rect
pinwheel instead, which makes the instance non-sliceable.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Set

import numpy as np

from models import Rect, Subdivision, rat
from simdraw.subdivision import canonical, validate

logger = logging.getLogger(__name__)

DEFAULT_SIZE = 100


def _fresh(rng: np.random.Generator, lo: Fraction, hi: Fraction, used: Set[Fraction], count: int = 1) -> List[Fraction]:
    """`count` distinct sorted values strictly inside (lo, hi), none of them in `used`."""
    d = 8
    while True:
        candidates = [lo + (hi - lo) * Fraction(k, d) for k in range(1, d)]
        candidates = [c for c in candidates if c not in used]
        if len(candidates) >= count:
            picks = rng.choice(len(candidates), size=count, replace=False)
            values = sorted(candidates[int(i)] for i in picks)
            used.update(values)
            return values
        d *= 2


def _split(rng: np.random.Generator, r: Rect, used_x: Set[Fraction], used_y: Set[Fraction]) -> List[Rect]:
    vertical = rng.random() < float(r.width / (r.width + r.height))
    if vertical:
        (x,) = _fresh(rng, r.x1, r.x2, used_x)
        return [r.moved(x2=x), Rect(r.id, x, r.y1, r.x2, r.y2)]
    (y,) = _fresh(rng, r.y1, r.y2, used_y)
    return [r.moved(y2=y), Rect(r.id, r.x1, y, r.x2, r.y2)]


def pinwheel(
    rng: np.random.Generator,
    r: Rect,
    used_x: Set[Fraction],
    used_y: Set[Fraction],
    mirrored: bool = False,
) -> List[Rect]:
    """Five rects tiling r around a central one, cut at fresh coordinates."""
    xa, xb = _fresh(rng, r.x1, r.x2, used_x, 2)
    ya, yb = _fresh(rng, r.y1, r.y2, used_y, 2)
    if mirrored:
        # reflect the cuts so the arms turn the other way
        return [
            Rect(r.id, xa, r.y1, r.x2, ya),
            Rect(r.id, r.x1, r.y1, xa, yb),
            Rect(r.id, xb, ya, r.x2, r.y2),
            Rect(r.id, xa, ya, xb, yb),
            Rect(r.id, r.x1, yb, xb, r.y2),
        ]
    return [
        Rect(r.id, r.x1, r.y1, xb, ya),
        Rect(r.id, xb, r.y1, r.x2, yb),
        Rect(r.id, r.x1, ya, xa, r.y2),
        Rect(r.id, xa, ya, xb, yb),
        Rect(r.id, xa, yb, r.x2, r.y2),
    ]


def _relabel(rects: List[Rect]) -> List[Rect]:
    ordered = sorted(rects, key=lambda r: (r.y1, r.x1))
    width = len(str(len(ordered)))
    return [r.moved(id=f"r{i:0{width}d}") for i, r in enumerate(ordered, start=1)]


def generate(
    n: int,
    seed: int = 0,
    pinwheel_p: float = 0.0,
    size: int = DEFAULT_SIZE,
    rng: Optional[np.random.Generator] = None,
) -> Subdivision:
    """Random valid subdivision of [0, size]^2 into exactly n rects.

    Deterministic for a given (n, seed, pinwheel_p, size).
    """
    if n < 1:
        raise ValueError(f"need at least one rect, got n={n}")
    if not 0.0 <= pinwheel_p <= 1.0:
        raise ValueError(f"pinwheel probability must be in [0, 1], got {pinwheel_p}")
    if rng is None:
        rng = np.random.default_rng(seed)

    bounds = Rect("bounds", rat(0), rat(0), rat(size), rat(size))
    used_x = {bounds.x1, bounds.x2}
    used_y = {bounds.y1, bounds.y2}
    rects = [bounds.moved(id="r")]
    pinwheels = 0

    while len(rects) < n:
        areas = np.array([float(r.area) for r in rects])
        i = int(rng.choice(len(rects), p=areas / areas.sum()))
        target = rects.pop(i)
        if len(rects) + 5 <= n and rng.random() < pinwheel_p:
            rects.extend(pinwheel(rng, target, used_x, used_y, mirrored=bool(rng.random() < 0.5)))
            pinwheels += 1
        else:
            rects.extend(_split(rng, target, used_x, used_y))

    sub = Subdivision(bounds, canonical(_relabel(rects)))
    validate(sub)
    logger.debug(f"Generated {n} rects (seed={seed}, {pinwheels} pinwheel(s))")
    return sub


def corpus(count: int, seed: int = 0, min_rects: int = 5, max_rects: int = 60, pinwheel_p: float = 0.3):
    """`count` instances for consecutive seeds starting at `seed`, sizes drawn per seed."""
    for s in range(seed, seed + count):
        rng = np.random.default_rng(s)
        n = int(rng.integers(min_rects, max_rects + 1))
        yield s, generate(n, seed=s, pinwheel_p=pinwheel_p, rng=rng)
