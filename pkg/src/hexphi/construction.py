"""The tangent-segment construction at a tessellation vertex and its exact
golden-ratio verification.

Around a vertex O shared by three hexagons, each hexagon contributes three
concentric circles centered on its center: radii side/2, side and 2*side
(relationship 1:2:4, the middle one circumscribing the hexagon and passing
through O).  From O, two tangents are drawn to each small circle, giving six
tangent lines.  On each line, A is the second crossing with that hexagon's
middle circle and B is the crossing with the large circle on the opposite
side of O.  The claim verified here, exactly and per segment, is that O
divides AB in the golden ratio:

    AB = phi * AO  and  AO = phi * OB.

Both identities are checked multiplicatively on squared lengths
(ab2 == phi**2 * ao2 and ao2 == phi**2 * ob2), which avoids division while
still pinning the ratio, since all quantities are positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import PHI, QuadExt, format_fraction, sign, to_decimal
from .fibonacci import Convergent, assess_nearest
from .geometry import (
    Circle,
    ParamLine,
    Point,
    line_circle_intersections,
    squared_distance,
    tangent_lines_from_point,
)
from .tessellation import HexIndex, VertexRef, hex_center, incident_hexagons, vertex_point

_PHI_SQUARED = PHI * PHI


@dataclass(frozen=True)
class CircleTriple:
    """The three concentric circles of one hexagon in a cluster."""

    hex: HexIndex
    small: Circle
    middle: Circle
    large: Circle


@dataclass(frozen=True)
class Cluster:
    """A vertex O with the circle triples of its three incident hexagons."""

    vertex: VertexRef
    side: Fraction
    o: Point
    triples: tuple[CircleTriple, CircleTriple, CircleTriple]


@dataclass(frozen=True)
class PhiSegment:
    """One tangent segment A-B through O, with exact squared lengths."""

    k: int
    hex: HexIndex
    line: ParamLine
    a: Point
    b: Point
    ao2: QuadExt
    ob2: QuadExt
    ab2: QuadExt

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "hex": str(self.hex),
            "A": self.a.to_json(),
            "B": self.b.to_json(),
            "ao2": self.ao2.to_json(),
            "ob2": self.ob2.to_json(),
            "ab2": self.ab2.to_json(),
        }


@dataclass(frozen=True)
class PhiReport:
    """Verification verdict for one cluster."""

    vertex: VertexRef
    side: Fraction
    frac_digits: int
    segments: tuple[PhiSegment, ...]
    phi_exact_ok: bool
    equal_lengths_ok: bool
    ratio_decimal: str | None
    fib_assessment: Convergent | None

    def to_json(self) -> dict:
        fibonacci = None
        if self.fib_assessment is not None:
            fibonacci = {
                "n": self.fib_assessment.n,
                "ratio": format_fraction(self.fib_assessment.ratio),
                "variance": self.fib_assessment.variance_decimal(self.frac_digits),
            }
        return {
            "vertex": str(self.vertex),
            "side": format_fraction(self.side),
            "segments": [segment.to_json() for segment in self.segments],
            "phi_exact_ok": self.phi_exact_ok,
            "equal_lengths_ok": self.equal_lengths_ok,
            "ratio_decimal": self.ratio_decimal,
            "fibonacci": fibonacci,
        }


def build_cluster(vertex: VertexRef, side: int | Fraction = 1) -> Cluster:
    """Circles of the three hexagons incident to `vertex`.

    Small, middle and large radii are side/2, side and 2*side; O lies on
    each middle circle because a hexagon's circumradius equals its side.
    """
    if isinstance(side, float):
        raise TypeError("side must be exact; pass Fraction or int")
    side = Fraction(side)
    if side <= 0:
        raise ValueError("side must be positive")
    o = vertex_point(vertex, side)
    triples = []
    for hexagon in incident_hexagons(vertex):
        center = hex_center(hexagon, side)
        triples.append(
            CircleTriple(
                hex=hexagon,
                small=Circle(center, QuadExt(side / 2)),
                middle=Circle(center, QuadExt(side)),
                large=Circle(center, QuadExt(2 * side)),
            )
        )
    return Cluster(vertex=vertex, side=side, o=o, triples=(triples[0], triples[1], triples[2]))


def construct_segments(cluster: Cluster) -> tuple[PhiSegment, ...]:
    """The six tangent segments through O, numbered 1..6.

    Hexagons are visited in their sorted order; within a hexagon the two
    tangent lines come ordered by direction angle.  On each line the segment
    endpoint A is the middle-circle crossing other than O itself, and B is
    the large-circle crossing on the opposite side of O from A.
    """
    segments = []
    for triple in cluster.triples:
        for line in tangent_lines_from_point(cluster.o, triple.small):
            middle_ts = [
                t for t in line_circle_intersections(line, triple.middle) if sign(t) != 0
            ]
            if len(middle_ts) != 1:
                raise ValueError(
                    "vertex must lie on the middle circle; got "
                    f"{len(middle_ts)} nonzero crossings for hexagon {triple.hex}"
                )
            t_a = middle_ts[0]
            away = -sign(t_a)
            large_ts = [
                t for t in line_circle_intersections(line, triple.large) if sign(t) == away
            ]
            if len(large_ts) != 1:
                raise ValueError(
                    "vertex must lie strictly inside the large circle of hexagon "
                    f"{triple.hex}"
                )
            t_b = large_ts[0]
            a = line.point_at(t_a)
            b = line.point_at(t_b)
            segments.append(
                PhiSegment(
                    k=len(segments) + 1,
                    hex=triple.hex,
                    line=line,
                    a=a,
                    b=b,
                    ao2=squared_distance(a, cluster.o),
                    ob2=squared_distance(cluster.o, b),
                    ab2=squared_distance(a, b),
                )
            )
    return tuple(segments)


def verify_phi(segment: PhiSegment) -> tuple[bool, bool]:
    """(AB = phi*AO, AO = phi*OB), each checked exactly on squared lengths."""
    return (
        segment.ab2 == _PHI_SQUARED * segment.ao2,
        segment.ao2 == _PHI_SQUARED * segment.ob2,
    )


def make_report(cluster: Cluster, frac_digits: int = 10) -> PhiReport:
    """Construct, verify and summarize one cluster.

    ``phi_exact_ok`` demands both identities on all six segments;
    ``equal_lengths_ok`` demands the six ab2 values be field-equal.  The
    decimal ratio and its nearest Fibonacci convergent are reported only
    when the golden identity holds, because only then is the ratio phi.
    """
    segments = construct_segments(cluster)
    phi_exact_ok = all(all(verify_phi(segment)) for segment in segments)
    first_ab2 = segments[0].ab2
    equal_lengths_ok = all(segment.ab2 == first_ab2 for segment in segments[1:])
    ratio_decimal = None
    fib_assessment = None
    if phi_exact_ok:
        ratio_decimal = to_decimal(PHI, frac_digits)
        fib_assessment = assess_nearest(ratio_decimal)
    return PhiReport(
        vertex=cluster.vertex,
        side=cluster.side,
        frac_digits=frac_digits,
        segments=segments,
        phi_exact_ok=phi_exact_ok,
        equal_lengths_ok=equal_lengths_ok,
        ratio_decimal=ratio_decimal,
        fib_assessment=fib_assessment,
    )
