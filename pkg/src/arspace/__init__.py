"""Homological algebra and strip geometry of continuous type-A quivers."""

from .derived import DObject, TriangleResult, derived_hom_dim, derived_position, gamma_b, parse_dobject, triangle
from .errors import ArspaceError
from .geometry import (
    GenDist,
    LambdaKey,
    Position,
    RectangleKind,
    RectangleResult,
    Region,
    RegionResult,
    Sign,
    SlopeClass,
    StripPoint,
    extension_rectangle,
    gamma,
    hom_region,
    kappa,
    lambda_eval,
    metric_d,
    phat,
    position,
    same_gamma,
    slope_class,
)
from .homalg import ARSequence, ExtResult, HomResult, ar_sequence, ext_with_middle, hom_dim, kernel_cokernel
from .interval import Interval, Kind, Variant, canonical_support, classify, format_interval, parse_interval
from .quiver import Direction, ExtReal, Parity, QuiverSpec, local_direction, precedes, quiver_from_json, validate_quiver

__version__ = "0.1.0"

__all__ = [
    "ARSequence", "ArspaceError", "DObject", "Direction", "ExtReal", "ExtResult", "GenDist", "HomResult",
    "Interval", "Kind", "LambdaKey", "Parity", "Position", "QuiverSpec", "RectangleKind", "RectangleResult",
    "Region", "RegionResult", "Sign", "SlopeClass", "StripPoint", "TriangleResult", "Variant",
    "ar_sequence", "canonical_support", "classify", "derived_hom_dim", "derived_position", "ext_with_middle",
    "extension_rectangle", "format_interval", "gamma", "gamma_b", "hom_dim", "hom_region", "kappa",
    "kernel_cokernel", "lambda_eval", "local_direction", "metric_d", "parse_dobject", "parse_interval", "phat",
    "position", "precedes", "quiver_from_json", "same_gamma", "slope_class", "triangle", "validate_quiver",
]
