"""Exact plane geometry over the field: points, parametric lines, circles.

Lines are parametric, ``origin + t * dir``, with no unit-length requirement on
``dir``; intersection parameters are therefore relative to ``|dir|``.  Every
predicate reduces to a coefficient comparison or to the exact sign of a field
element, so tangency and membership are decided without tolerances.

Square roots are taken through :func:`hexphi.exact.sqrt_exact`, which only
accepts rational radicands; a discriminant or distance whose root would leave
the field raises :class:`hexphi.exact.NotRepresentable`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .exact import NotRepresentable, QuadExt, as_quadext, sign, sqrt_exact

Direction = tuple[QuadExt, QuadExt]


@dataclass(frozen=True)
class Point:
    x: QuadExt
    y: QuadExt

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_quadext(self.x))
        object.__setattr__(self, "y", as_quadext(self.y))

    def to_json(self) -> dict[str, dict[str, str]]:
        return {"x": self.x.to_json(), "y": self.y.to_json()}


@dataclass(frozen=True)
class ParamLine:
    """Line through `origin` with direction `dir`, traced as origin + t*dir."""

    origin: Point
    dir: Direction

    def __post_init__(self) -> None:
        dx, dy = self.dir
        dx = as_quadext(dx)
        dy = as_quadext(dy)
        if dx.is_zero and dy.is_zero:
            raise ValueError("line direction must be nonzero")
        object.__setattr__(self, "dir", (dx, dy))

    def point_at(self, t: QuadExt | int | Fraction) -> Point:
        t = as_quadext(t)
        return Point(self.origin.x + t * self.dir[0], self.origin.y + t * self.dir[1])


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: QuadExt

    def __post_init__(self) -> None:
        radius = as_quadext(self.radius)
        if sign(radius) <= 0:
            raise ValueError("circle radius must be positive")
        object.__setattr__(self, "radius", radius)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("segment endpoints must differ")


class PointInsideCircle(ValueError):
    """No tangent line exists from a point strictly inside a circle."""


def squared_distance(p: Point, q: Point) -> QuadExt:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def squared_distance_point_line(p: Point, line: ParamLine) -> QuadExt:
    """Squared distance from `p` to the (infinite) line.

    cross(dir, p - origin)**2 / |dir|**2, a rational function of the inputs,
    so the result stays in the field.
    """
    dx, dy = line.dir
    wx = p.x - line.origin.x
    wy = p.y - line.origin.y
    cross = dx * wy - dy * wx
    return cross * cross / (dx * dx + dy * dy)


def is_tangent(line: ParamLine, circle: Circle) -> bool:
    return squared_distance_point_line(circle.center, line) == circle.radius * circle.radius


def line_circle_intersections(line: ParamLine, circle: Circle) -> list[QuadExt]:
    """Parameters t of line/circle intersections, sorted ascending.

    Solves the quadratic |origin + t*dir - center|**2 = r**2 exactly.  The
    list is empty for a miss and has one element for a tangency.  Raises
    NotRepresentable when the discriminant's square root leaves the field.
    """
    dx, dy = line.dir
    wx = line.origin.x - circle.center.x
    wy = line.origin.y - circle.center.y
    lead = dx * dx + dy * dy
    half = wx * dx + wy * dy  # half the linear coefficient
    const = wx * wx + wy * wy - circle.radius * circle.radius
    discriminant = half * half - lead * const  # quarter discriminant
    if not discriminant.is_rational:
        raise NotRepresentable("intersection discriminant has no square root in the field")
    disc_sign = sign(discriminant)
    if disc_sign < 0:
        return []
    if disc_sign == 0:
        return [-half / lead]
    root = sqrt_exact(discriminant.a)
    return [(-half - root) / lead, (-half + root) / lead]


def _field_sqrt(value: QuadExt) -> QuadExt:
    if not value.is_rational:
        raise NotRepresentable("square root of an irrational field element is unsupported")
    return sqrt_exact(value.a)


def tangent_lines_from_point(p: Point, circle: Circle) -> list[ParamLine]:
    """Tangent lines from `p` to `circle`, through `p`, sorted by direction angle.

    For a point on the circle there is a single tangent (the perpendicular to
    the radius); for an exterior point the two tangent directions are the unit
    vector toward the center rotated by +/-theta, with cos(theta) and
    sin(theta) formed as exact ratios tangent_length/|pc| and radius/|pc|.
    Raises PointInsideCircle for interior points and NotRepresentable when
    |pc| or the tangent length is irrational in the field.
    """
    cx = circle.center.x - p.x
    cy = circle.center.y - p.y
    dist2 = cx * cx + cy * cy
    reach2 = dist2 - circle.radius * circle.radius  # squared tangent length
    outside = sign(reach2)
    if outside < 0:
        raise PointInsideCircle("no tangent from a point inside the circle")
    if outside == 0:
        return [ParamLine(p, (-cy, cx))]
    dist = _field_sqrt(dist2)
    reach = _field_sqrt(reach2)
    ux = cx / dist
    uy = cy / dist
    cos_t = reach / dist
    sin_t = circle.radius / dist
    plus: Direction = (cos_t * ux - sin_t * uy, sin_t * ux + cos_t * uy)
    minus: Direction = (cos_t * ux + sin_t * uy, -sin_t * ux + cos_t * uy)
    ordered = sorted([plus, minus], key=direction_angle_key)
    return [ParamLine(p, direction) for direction in ordered]


def _direction_class(direction: Direction) -> int:
    # 0: positive x-axis, 1: open upper half, 2: negative x-axis, 3: open lower half
    dx, dy = direction
    sy = sign(dy)
    if sy > 0:
        return 1
    if sy < 0:
        return 3
    return 0 if sign(dx) > 0 else 2


def compare_directions(d1: Direction, d2: Direction) -> int:
    """Order directions by angle in [0, 2*pi); -1, 0 or +1, decided exactly."""
    c1 = _direction_class(d1)
    c2 = _direction_class(d2)
    if c1 != c2:
        return -1 if c1 < c2 else 1
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    return -sign(cross)


#: Sort key ordering directions by angle in [0, 2*pi), decided exactly.
direction_angle_key = cmp_to_key(compare_directions)
