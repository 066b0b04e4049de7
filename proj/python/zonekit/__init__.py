"""Voronoi and zone diagrams in the l_p plane."""

try:
    from . import _zonekit as _impl
except ImportError:  # build-tree layout: extension module sits on sys.path
    import _zonekit as _impl

LpNorm = _impl.LpNorm
ConvexRegion = _impl.ConvexRegion
Scene = _impl.Scene
ValidationError = _impl.ValidationError
TheoryViolation = _impl.TheoryViolation

distance = _impl.distance
set_distance = _impl.set_distance
convexity_modulus_estimate = _impl.convexity_modulus_estimate
sample_directions = _impl.sample_directions
reach = _impl.reach
hausdorff = _impl.hausdorff
directed_hausdorff = _impl.directed_hausdorff
load_scene = _impl.load_scene
parse_scene = _impl.parse_scene
voronoi_clouds = _impl.voronoi_clouds
zone_summary = _impl.zone_summary

__version__ = "0.1.0"

__all__ = [
    "ConvexRegion",
    "LpNorm",
    "Scene",
    "TheoryViolation",
    "ValidationError",
    "convexity_modulus_estimate",
    "directed_hausdorff",
    "distance",
    "hausdorff",
    "load_scene",
    "parse_scene",
    "reach",
    "sample_directions",
    "set_distance",
    "voronoi_clouds",
    "zone_summary",
]
