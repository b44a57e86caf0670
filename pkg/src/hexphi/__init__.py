"""Exact construction and golden-ratio verification of tangent segments
through the vertices of a regular hexagonal tessellation."""

from .construction import (
    CircleTriple,
    Cluster,
    PhiReport,
    PhiSegment,
    build_cluster,
    construct_segments,
    make_report,
    verify_phi,
)
from .exact import (
    HALF_EVEN,
    PHI,
    SQRT3,
    SQRT5,
    SQRT15,
    TRUNCATE,
    NegativeInput,
    NotRepresentable,
    QuadExt,
    as_quadext,
    format_fraction,
    parse_rational,
    sign,
    sqrt_exact,
    to_decimal,
)
from .fibonacci import Convergent, assess_nearest, convergent, fib, variance
from .geometry import (
    Circle,
    ParamLine,
    Point,
    PointInsideCircle,
    Segment,
    compare_directions,
    direction_angle_key,
    is_tangent,
    line_circle_intersections,
    squared_distance,
    squared_distance_point_line,
    tangent_lines_from_point,
)
from .render import RenderOptions, render_svg
from .tessellation import (
    NEIGHBOR_STEPS,
    HexIndex,
    VertexRef,
    enumerate_vertices,
    hex_center,
    hex_corners,
    incident_hexagons,
    vertex_point,
)

__version__ = "0.1.0"

__all__ = [
    "HALF_EVEN",
    "NEIGHBOR_STEPS",
    "PHI",
    "SQRT3",
    "SQRT5",
    "SQRT15",
    "TRUNCATE",
    "Circle",
    "CircleTriple",
    "Cluster",
    "Convergent",
    "HexIndex",
    "NegativeInput",
    "NotRepresentable",
    "ParamLine",
    "PhiReport",
    "PhiSegment",
    "Point",
    "PointInsideCircle",
    "QuadExt",
    "RenderOptions",
    "Segment",
    "VertexRef",
    "as_quadext",
    "assess_nearest",
    "build_cluster",
    "compare_directions",
    "construct_segments",
    "convergent",
    "direction_angle_key",
    "enumerate_vertices",
    "fib",
    "format_fraction",
    "hex_center",
    "hex_corners",
    "incident_hexagons",
    "is_tangent",
    "line_circle_intersections",
    "make_report",
    "parse_rational",
    "render_svg",
    "sign",
    "sqrt_exact",
    "squared_distance",
    "squared_distance_point_line",
    "tangent_lines_from_point",
    "to_decimal",
    "variance",
    "vertex_point",
    "verify_phi",
    "__version__",
]
