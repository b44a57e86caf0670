"""Regular hexagonal tessellation on axial coordinates, flat-top orientation.

A hexagon ``(q, r)`` with side length ``s`` is centered at
``q * (3s/2, s*sqrt3/2) + r * (0, s*sqrt3)``; its six corners sit at angles
``60*k`` degrees (corner 0 on the positive x side).  Corner coordinates all
live in the exact field, so vertex coincidence is decidable by equality.

Each geometric vertex is shared by exactly three hexagons and therefore has
three ``(hexagon, corner)`` names.  A :class:`VertexRef` normalizes itself to
the lexicographically smallest ``(q, r, corner)`` of the three, which makes
reference equality coincide with geometric identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import QuadExt
from .geometry import Point

#: Axial steps to the six neighbors, listed by azimuth 30 + 60*i degrees.
NEIGHBOR_STEPS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

_HALF = Fraction(1, 2)
# corner k offset from the center: side * (cos 60k, sin 60k),
# split into the rational part and the coefficient of sqrt(3)
_CORNER_COS = (Fraction(1), _HALF, -_HALF, Fraction(-1), -_HALF, _HALF)
_CORNER_SIN_SQRT3 = (Fraction(0), _HALF, _HALF, Fraction(0), -_HALF, -_HALF)


def _checked_side(side: int | Fraction) -> Fraction:
    if isinstance(side, float):
        raise TypeError("side must be exact; pass Fraction or int")
    side = Fraction(side)
    if side <= 0:
        raise ValueError("side must be positive")
    return side


@dataclass(frozen=True, order=True)
class HexIndex:
    q: int
    r: int

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not isinstance(self.r, int):
            raise TypeError("axial coordinates must be integers")

    def __str__(self) -> str:
        return f"{self.q},{self.r}"


def _canonical_triple(q: int, r: int, corner: int) -> tuple[int, int, int]:
    n1 = NEIGHBOR_STEPS[(corner - 1) % 6]
    n2 = NEIGHBOR_STEPS[corner % 6]
    aliases = (
        (q, r, corner),
        (q + n1[0], r + n1[1], (corner + 2) % 6),
        (q + n2[0], r + n2[1], (corner + 4) % 6),
    )
    return min(aliases)


@dataclass(frozen=True, order=True)
class VertexRef:
    """A tessellation vertex, stored in canonical (q, r, corner) form.

    Any of the three equivalent (hexagon, corner) names may be passed in;
    the constructor rewrites it to the smallest one, so two references are
    equal exactly when they name the same geometric point.
    """

    hex: HexIndex
    corner: int

    def __post_init__(self) -> None:
        if not isinstance(self.corner, int) or not 0 <= self.corner <= 5:
            raise ValueError("corner must be an integer in 0..5")
        q, r, corner = _canonical_triple(self.hex.q, self.hex.r, self.corner)
        object.__setattr__(self, "hex", HexIndex(q, r))
        object.__setattr__(self, "corner", corner)

    @classmethod
    def from_string(cls, text: str) -> VertexRef:
        """Parse ``q,r,corner`` (canonical or not)."""
        parts = text.strip().split(",")
        if len(parts) != 3:
            raise ValueError(f"expected 'q,r,corner', got {text!r}")
        try:
            q, r, corner = (int(part) for part in parts)
        except ValueError:
            raise ValueError(f"vertex components must be integers: {text!r}") from None
        return cls(HexIndex(q, r), corner)

    def __str__(self) -> str:
        return f"{self.hex.q},{self.hex.r},{self.corner}"


def hex_center(hexagon: HexIndex, side: int | Fraction = 1) -> Point:
    side = _checked_side(side)
    x = QuadExt(side * Fraction(3, 2) * hexagon.q)
    y = QuadExt(0, side * (Fraction(hexagon.q, 2) + hexagon.r))
    return Point(x, y)


def hex_corners(hexagon: HexIndex, side: int | Fraction = 1) -> list[Point]:
    """The six corner points, corner 0 first."""
    side = _checked_side(side)
    center = hex_center(hexagon, side)
    return [
        Point(center.x + QuadExt(side * _CORNER_COS[k]), center.y + QuadExt(0, side * _CORNER_SIN_SQRT3[k]))
        for k in range(6)
    ]


def vertex_point(vertex: VertexRef, side: int | Fraction = 1) -> Point:
    side = _checked_side(side)
    center = hex_center(vertex.hex, side)
    k = vertex.corner
    return Point(
        center.x + QuadExt(side * _CORNER_COS[k]),
        center.y + QuadExt(0, side * _CORNER_SIN_SQRT3[k]),
    )


def incident_hexagons(vertex: VertexRef) -> tuple[HexIndex, HexIndex, HexIndex]:
    """The three hexagons sharing the vertex, sorted by (q, r)."""
    q, r, corner = vertex.hex.q, vertex.hex.r, vertex.corner
    n1 = NEIGHBOR_STEPS[(corner - 1) % 6]
    n2 = NEIGHBOR_STEPS[corner % 6]
    hexes = sorted(
        (HexIndex(q, r), HexIndex(q + n1[0], r + n1[1]), HexIndex(q + n2[0], r + n2[1]))
    )
    return (hexes[0], hexes[1], hexes[2])


def enumerate_vertices(patch_radius: int) -> list[VertexRef]:
    """All distinct vertices of the hexagons with |q|, |r|, |q+r| <= patch_radius.

    Returned in canonical form, sorted by (q, r, corner).  The patch of
    radius n holds 3n(n+1)+1 hexagons and 6(n+1)**2 distinct vertices.
    """
    if patch_radius < 0:
        raise ValueError("patch radius must be nonnegative")
    n = patch_radius
    found = set()
    for q in range(-n, n + 1):
        for r in range(-n, n + 1):
            if abs(q + r) > n:
                continue
            for corner in range(6):
                found.add(VertexRef(HexIndex(q, r), corner))
    return sorted(found)
