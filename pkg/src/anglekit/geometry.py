"""Planar angle geometry: rays, arcs, chords, and the chord integral.

The chord integral F(x) = ∫₀ˣ dt/√(1−t²) is evaluated by numerical
quadrature on purpose.  It must stand on its own as a second route to the
inverse sine, so it never calls one; after the substitution u = √(1−t)
the integrand 2/√(2−u²) is smooth on all of [0, 1] (the singularity sits
at u = √2) and a modest adaptive rule reaches 1e-10 territory including
the endpoint x = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import AngleValue, Magnitude, Measure, measure_of
from .errors import DegenerateVertexError, DomainError, ZeroAngleError
from .exact import TWO_PI, ZERO, ExactScalar
from .quadrature import integrate

__all__ = [
    "PlanarPoint",
    "ArcSpec",
    "angle_from_points",
    "congruent",
    "arc_length",
    "chord_length",
    "chord_integral",
    "chord_integral_inverse",
]

_DEGENERACY_THRESHOLD = 1e-12  # relative to the longer ray


@dataclass(frozen=True)
class PlanarPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError("planar points need finite coordinates")


@dataclass(frozen=True)
class ArcSpec:
    """A circular arc: positive radius plus a magnitude-range measure."""

    radius: float
    measure: Measure

    def __post_init__(self):
        if not math.isfinite(self.radius) or self.radius <= 0.0:
            raise DomainError("arc radius must be positive and finite")
        value = self.measure.value
        if value.compare(ZERO) <= 0 or value.compare(TWO_PI) > 0:
            raise DomainError("arc measure must lie in (0, 2π]")


def angle_from_points(p: PlanarPoint, vertex: PlanarPoint, q: PlanarPoint) -> Magnitude:
    """The magnitude between rays vertex→p and vertex→q.

    Rejects rays too short to define a direction and ray pairs pointing
    the same way (no angle exists between coincident rays).  The result
    is inexact by nature and lies in (0, π].
    """
    ux, uy = p.x - vertex.x, p.y - vertex.y
    vx, vy = q.x - vertex.x, q.y - vertex.y
    lu = math.hypot(ux, uy)
    lv = math.hypot(vx, vy)
    longer = max(lu, lv)
    if min(lu, lv) <= _DEGENERACY_THRESHOLD * longer:
        raise DegenerateVertexError("ray endpoint coincides with the vertex")
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    if abs(cross) <= _DEGENERACY_THRESHOLD * lu * lv and dot > 0.0:
        raise ZeroAngleError("rays point the same way; no angle between them")
    phi = math.atan2(abs(cross), dot)
    if phi <= 0.0:
        raise ZeroAngleError("rays point the same way; no angle between them")
    return Magnitude(Measure(ExactScalar.inexact(phi)))


def congruent(a: Magnitude, b: Magnitude, tolerance: float = 0.0) -> bool:
    """Whether two magnitudes are the same angle.

    With the default zero tolerance, exact operands compare exactly.
    """
    if tolerance < 0.0 or not math.isfinite(tolerance):
        raise ValueError("tolerance must be a finite non-negative float")
    va = a.measure.value
    vb = b.measure.value
    if tolerance == 0.0:
        return va.compare(vb) == 0
    return abs(va.to_float() - vb.to_float()) <= tolerance


def arc_length(arc: ArcSpec) -> float:
    """Arc length s = measure·radius.

    One multiplication, so s/r recovers the measure bit-for-bit whenever
    the radius is a power of two, and to within 1 ulp otherwise.
    """
    return arc.measure.value.to_float() * arc.radius


def chord_length(angle: AngleValue, radius: float) -> float:
    """Chord subtended by `angle` on a circle of `radius`.

    The angle's measure must lie in [0, 2π]; the chord is 2r·sin(φ/2).
    """
    if not math.isfinite(radius) or radius <= 0.0:
        raise DomainError("chord radius must be positive and finite")
    phi = measure_of(angle).value
    if phi.compare(ZERO) < 0 or phi.compare(TWO_PI) > 0:
        raise DomainError("chord needs a measure in [0, 2π]")
    return 2.0 * radius * math.sin(0.5 * phi.to_float())


def chord_integral(x: float) -> float:
    """F(x) = ∫₀ˣ dt/√(1−t²) for x in [0, 1], by quadrature alone.

    Monotone from F(0) = 0 to F(1) = π/2.  Deliberately independent of
    math.asin so the two can check each other.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError("chord integral is defined on [0, 1]")
    if x == 0.0:
        return 0.0
    lower = math.sqrt(1.0 - x)
    return integrate(lambda u: 2.0 / math.sqrt(2.0 - u * u), lower, 1.0, tolerance=1e-11)


def chord_integral_inverse(y: float) -> float:
    """The inverse map of chord_integral, defined on [0, π/2]."""
    if not 0.0 <= y <= math.pi / 2.0:
        raise DomainError("inverse chord integral is defined on [0, π/2]")
    return math.sin(y)
