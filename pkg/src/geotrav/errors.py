"""Exception hierarchy shared by every module."""


class GeoTravError(Exception):
    """Base class; ``code`` is the machine-readable name used by the CLI."""

    code = "error"


class TargetEqualsOrigin(GeoTravError, ValueError):
    code = "target_equals_origin"


class DegenerateApex(GeoTravError, ValueError):
    code = "degenerate_apex"


class DuplicatePoint(GeoTravError, ValueError):
    code = "duplicate_point"


class NonInjectiveWeights(GeoTravError, ValueError):
    code = "non_injective_weights"


class InvalidWeight(GeoTravError, ValueError):
    code = "invalid_weight"


class InvalidArc(GeoTravError, KeyError):
    code = "invalid_arc"


class Disconnected(GeoTravError, ValueError):
    code = "disconnected"


class TooSmall(GeoTravError, ValueError):
    code = "too_small"


class TooLarge(GeoTravError, ValueError):
    code = "too_large"


class IsolatedVertex(GeoTravError, ValueError):
    code = "isolated_vertex"


class BadBudget(GeoTravError, ValueError):
    code = "bad_budget"


class OnLattice(GeoTravError, ValueError):
    code = "on_lattice"


class GeneralPositionViolation(GeoTravError, ValueError):
    code = "general_position_violation"


class NoSuchWeight(GeoTravError, KeyError):
    code = "no_such_weight"


class GenerationExhausted(GeoTravError, RuntimeError):
    code = "generation_exhausted"


class InstanceFormatError(GeoTravError, ValueError):
    code = "instance_format"


class ShadowLost(GeoTravError, RuntimeError):
    """The real robot found no admissible vertex within its pebble budget."""

    code = "shadow_lost"


class IterationCapExceeded(GeoTravError, RuntimeError):
    code = "iteration_cap_exceeded"
