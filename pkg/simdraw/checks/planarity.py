"""No two edge segments meet except at a shared endpoint."""

from itertools import combinations

from models import Pt
from simdraw.checks.base import Check
from simdraw.geometry import segment_intersection
from simdraw.types import VerifyContext


class PlanarityCheck(Check):
    name = "planarity"
    description = "straight-line edges pairwise non-crossing"

    def run(self, context: VerifyContext) -> None:
        pos = context.drawing.positions
        edges = sorted(
            tuple(sorted(p)) for p in context.drawing_adjacency if all(v in pos for v in p)
        )
        for e, f in combinations(edges, 2):
            hit = segment_intersection(pos[e[0]], pos[e[1]], pos[f[0]], pos[f[1]])
            if hit is None:
                continue
            shared = set(e) & set(f)
            if isinstance(hit, Pt) and shared and hit == pos[next(iter(shared))]:
                continue
            where = hit if isinstance(hit, Pt) else hit.a
            self.flag(context, f"edges {e[0]}-{e[1]} and {f[0]}-{f[1]} cross", (*e, *f), where)
