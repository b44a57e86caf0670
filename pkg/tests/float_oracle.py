"""Independent double-precision reconstruction of the tangent-segment figure.

Used only by tests.  Everything here is deliberately computed the blunt
floating-point way (trig for corners, arcsin rotation for tangent
directions, the quadratic formula for circle crossings) so that agreement
with the exact pipeline is meaningful.
"""

from __future__ import annotations

import math

TAU = 2 * math.pi


def quad_to_float(x) -> float:
    return (
        float(x.a)
        + float(x.b) * math.sqrt(3)
        + float(x.c) * math.sqrt(5)
        + float(x.d) * math.sqrt(15)
    )


def point_to_floats(p) -> tuple[float, float]:
    return quad_to_float(p.x), quad_to_float(p.y)


def hex_center(q: int, r: int, side: float) -> tuple[float, float]:
    return 1.5 * side * q, math.sqrt(3.0) * side * (0.5 * q + r)


def corner_point(q: int, r: int, k: int, side: float) -> tuple[float, float]:
    cx, cy = hex_center(q, r, side)
    return cx + side * math.cos(math.radians(60 * k)), cy + side * math.sin(
        math.radians(60 * k)
    )


def segments(vq: int, vr: int, vc: int, side: float = 1.0):
    """((ox, oy), [(hex, A, B), ...] in hexagon order, tangents angle-sorted)."""
    ox, oy = corner_point(vq, vr, vc, side)
    touching = []
    for q in range(vq - 2, vq + 3):
        for r in range(vr - 2, vr + 3):
            for k in range(6):
                px, py = corner_point(q, r, k, side)
                if math.hypot(px - ox, py - oy) < 1e-9 * side:
                    touching.append((q, r))
                    break
    touching.sort()
    assert len(touching) == 3, touching
    result = []
    for q, r in touching:
        hx, hy = hex_center(q, r, side)
        dist = math.hypot(hx - ox, hy - oy)
        base = math.atan2(hy - oy, hx - ox)
        theta = math.asin((side / 2) / dist)
        for angle in sorted(a % TAU for a in (base + theta, base - theta)):
            ux, uy = math.cos(angle), math.sin(angle)
            wx, wy = ox - hx, oy - hy
            b = 2 * (wx * ux + wy * uy)
            middle_c = wx * wx + wy * wy - side * side
            root = math.sqrt(b * b - 4 * middle_c)
            t_a = max(((-b - root) / 2, (-b + root) / 2), key=abs)
            large_c = wx * wx + wy * wy - 4 * side * side
            root = math.sqrt(b * b - 4 * large_c)
            candidates = ((-b - root) / 2, (-b + root) / 2)
            t_b = candidates[0] if candidates[0] * t_a < 0 else candidates[1]
            a_point = (ox + t_a * ux, oy + t_a * uy)
            b_point = (ox + t_b * ux, oy + t_b * uy)
            result.append(((q, r), a_point, b_point))
    return (ox, oy), result
