"""Trigonometric function families parameterized by a full-circle period.

A periodized sine with period p maps x to sin(2π·x/p): the familiar
functions for p = 2π, degree-flavored ones for p = 360, and so on.  The
argument is reduced modulo p in exact rational arithmetic, substituting a
75-digit value for π, before any float trig runs.  That keeps periodicity
exact (x and x + 10⁶·p produce the identical float) and keeps accuracy
flat across the whole argument range instead of decaying with |x|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .angles import (
    BUILTIN_REFERENCES,
    AngleValue,
    ReferenceAngle,
    measure_of,
)
from .errors import DomainError, PoleError
from .exact import PI_HIGH_PRECISION, ZERO, ExactScalar

__all__ = [
    "PeriodizedFunction",
    "UnitCirclePoint",
    "eval_periodized",
    "eval_inverse",
    "pythagorean_residual",
    "phase",
    "reference_for_period",
]

_KINDS = ("sin", "cos", "tan")
_INVERSE_KINDS = ("arcsin", "arccos")
_POLE_TOLERANCE = 1e-10  # in reduced-radian space


@dataclass(frozen=True)
class PeriodizedFunction:
    """One of sin/cos/tan rescaled to an exact positive period."""

    kind: str
    period: ExactScalar

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}")
        if not isinstance(self.period, ExactScalar) or not self.period.is_exact:
            raise DomainError("period must be an exact scalar")
        if self.period.compare(ZERO) <= 0:
            raise DomainError("period must be positive")

    def __call__(self, x: float) -> float:
        return eval_periodized(self, x)


@dataclass(frozen=True)
class UnitCirclePoint:
    """A point constrained to the unit circle."""

    re: float
    im: float

    def __post_init__(self):
        if abs(self.re * self.re + self.im * self.im - 1.0) > 1e-12:
            raise ValueError("point is off the unit circle")


def _scaled_argument(x: float, period: ExactScalar) -> float:
    """Reduce x modulo the period, then rescale into [0, 2π) radians.

    All in Fraction arithmetic with the high-precision π substitute, so
    the reduction itself introduces no rounding; the single float
    rounding happens on the final value.
    """
    q = Fraction(x) / period._precise()
    q -= math.floor(q)
    return float(2 * PI_HIGH_PRECISION * q)


def eval_periodized(f: PeriodizedFunction, x: float) -> float:
    """Evaluate a periodized function at a float argument."""
    if not math.isfinite(x):
        raise DomainError("argument must be finite")
    theta = _scaled_argument(x, f.period)
    if f.kind == "sin":
        return math.sin(theta)
    if f.kind == "cos":
        return math.cos(theta)
    half_pi = math.pi / 2.0
    if min(abs(theta - half_pi), abs(theta - 3.0 * half_pi)) < _POLE_TOLERANCE:
        raise PoleError("tangent pole: argument is an odd quarter of the period")
    return math.tan(theta)


def eval_inverse(kind: str, period: ExactScalar, x: float) -> AngleValue:
    """Inverse sine or cosine expressed against the given period.

    Returns an angle value whose reference has `period` as its full
    circle: in [-period/4, period/4] for arcsin, [0, period/2] for
    arccos.
    """
    if kind not in _INVERSE_KINDS:
        raise ValueError(f"kind must be one of {_INVERSE_KINDS}")
    if not isinstance(period, ExactScalar) or not period.is_exact:
        raise DomainError("period must be an exact scalar")
    if period.compare(ZERO) <= 0:
        raise DomainError("period must be positive")
    if not -1.0 <= x <= 1.0:
        raise DomainError("inverse sine and cosine are defined on [-1, 1]")
    theta = math.asin(x) if kind == "arcsin" else math.acos(x)
    # Dividing by π first makes the quarter-period anchors land exactly:
    # arccos(-1) with period 400 is 200.0, not 199.99999999999997.
    value = (theta / math.pi) * period.to_float() / 2.0
    return AngleValue(ExactScalar.inexact(value), reference_for_period(period))


def pythagorean_residual(period: ExactScalar, x: float) -> float:
    """cos²+sin²−1 for the periodized pair at x; zero up to float noise."""
    s = eval_periodized(PeriodizedFunction("sin", period), x)
    c = eval_periodized(PeriodizedFunction("cos", period), x)
    return c * c + s * s - 1.0


def phase(angle: AngleValue) -> UnitCirclePoint:
    """The unit-circle point an angle value lands on."""
    phi = measure_of(angle).value.to_float()
    return UnitCirclePoint(math.cos(phi), math.sin(phi))


def reference_for_period(period: ExactScalar) -> ReferenceAngle:
    """The builtin reference with this full circle, or a synthesized one."""
    for ref in BUILTIN_REFERENCES:
        if ref.full_circle == period:
            return ref
    text = period.render(ascii_only=True)
    return ReferenceAngle(f"period-{text}", f"[{text}]", period)
