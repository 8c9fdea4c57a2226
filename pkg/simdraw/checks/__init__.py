"""Default check registration."""

from simdraw.checks.containment import ContainmentCheck
from simdraw.checks.planarity import PlanarityCheck
from simdraw.checks.registry import CheckRegistry
from simdraw.checks.scaling import ScalingCheck
from simdraw.checks.single_crossing import SingleCrossingCheck
from simdraw.checks.subdivision_validity import SubdivisionValidityCheck


def create_default_registry() -> CheckRegistry:
    """Create a registry with all built-in checks enabled."""
    registry = CheckRegistry()
    registry.register(SubdivisionValidityCheck())
    registry.register(ContainmentCheck())
    registry.register(SingleCrossingCheck())
    registry.register(PlanarityCheck())
    registry.register(ScalingCheck())
    return registry
