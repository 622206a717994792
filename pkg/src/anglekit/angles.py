"""Reference angles and the three angle notions built on them.

An AngleValue is a numerical value paired with a reference angle (the
angle one full circle is divided into: radian, degree, gon, turn, ...).
A Measure is the dimensionless ratio 2π·value/full_circle; it is the only
thing a trigonometric function may legally consume, and it never carries
a unit symbol.  A Magnitude is the geometric object itself, represented
by a measure constrained to (0, 2π]: the zero angle does not exist here,
while the full circle does.

Conversions between references are exact whenever the input is exact:
they multiply by a ratio of two exact scalars, which stays inside the
(n/d)·π^e representation because every full circle is itself exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .exact import PI, TWO_PI, ZERO, ExactScalar

__all__ = [
    "ReferenceAngle",
    "AngleValue",
    "Measure",
    "Magnitude",
    "AngleClass",
    "RADIAN",
    "DEGREE",
    "GON",
    "TURN",
    "ARCMINUTE",
    "ARCSECOND",
    "BUILTIN_REFERENCES",
    "find_reference",
    "ascii_symbol",
    "convert",
    "measure_of",
    "value_from_measure",
    "straight_angle_coefficient",
    "reduce_principal",
    "classify",
    "semigroup_add",
]

_CLASSIFY_TOLERANCE = 1e-12  # relative to the full circle, inexact inputs only


@dataclass(frozen=True)
class ReferenceAngle:
    """A named unit angle: `full_circle` of them make one revolution."""

    name: str
    symbol: str
    full_circle: ExactScalar

    def __post_init__(self):
        if not isinstance(self.full_circle, ExactScalar):
            raise TypeError("full_circle must be an ExactScalar")
        if not self.full_circle.is_exact:
            raise DomainError("a reference angle needs an exact full circle")
        if self.full_circle.compare(ZERO) <= 0:
            raise DomainError("a reference angle's full circle must be positive")

    def __str__(self):
        return self.symbol


RADIAN = ReferenceAngle("radian", "rad", TWO_PI)
DEGREE = ReferenceAngle("degree", "°", ExactScalar(360))
GON = ReferenceAngle("gon", "gon", ExactScalar(400))
TURN = ReferenceAngle("turn", "turn", ExactScalar(1))
ARCMINUTE = ReferenceAngle("arcminute", "′", ExactScalar(21600))
ARCSECOND = ReferenceAngle("arcsecond", "″", ExactScalar(1296000))

BUILTIN_REFERENCES = (RADIAN, DEGREE, GON, TURN, ARCMINUTE, ARCSECOND)

_ASCII_SYMBOLS = {"°": "deg", "′": "arcmin", "″": "arcsec"}

_ALIASES: dict[str, ReferenceAngle] = {}
for _ref in BUILTIN_REFERENCES:
    _ALIASES[_ref.name] = _ref
    _ALIASES[_ref.symbol] = _ref
_ALIASES["deg"] = DEGREE
_ALIASES["arcmin"] = ARCMINUTE
_ALIASES["arcsec"] = ARCSECOND
del _ref


def find_reference(token: str) -> ReferenceAngle | None:
    """Look a unit token up by symbol or name ("°", "deg", "radian"...)."""
    return _ALIASES.get(token)


def ascii_symbol(reference: ReferenceAngle) -> str:
    """The 7-bit spelling of a reference's symbol."""
    return _ASCII_SYMBOLS.get(reference.symbol, reference.symbol)


@dataclass(frozen=True)
class AngleValue:
    """A numerical value read against a reference angle."""

    value: ExactScalar
    reference: ReferenceAngle

    def to(self, target: ReferenceAngle) -> "AngleValue":
        return convert(self, target)

    def measure(self) -> "Measure":
        return measure_of(self)

    def __str__(self):
        return f"{self.value} {self.reference.symbol}"


@dataclass(frozen=True)
class Measure:
    """A dimensionless angle measure.

    This type never prints a unit symbol: its value already is the
    radian-scaled ratio, and tagging one on would double-count.
    """

    value: ExactScalar

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Magnitude:
    """A geometric angle: a measure constrained to (0, 2π].

    The lower bound is strict because coincident rays bound no angle; the
    upper bound is inclusive because the full circle is one.
    """

    measure: Measure

    def __post_init__(self):
        value = self.measure.value
        if value.compare(ZERO) <= 0:
            raise DomainError("a magnitude requires a measure in (0, 2π]")
        if value.compare(TWO_PI) > 0:
            raise DomainError("a magnitude requires a measure in (0, 2π]")

    def __str__(self):
        return str(self.measure)


class AngleClass(Enum):
    """The classical names for magnitude ranges within one revolution."""

    ZERO = "zero angle"
    ACUTE = "acute angle"
    RIGHT = "right angle"
    OBTUSE = "obtuse angle"
    STRAIGHT = "straight angle"
    REFLEX = "reflex angle"
    PERIGON = "perigon"

    def __str__(self):
        return self.value


def convert(angle: AngleValue, target: ReferenceAngle) -> AngleValue:
    """Re-express an angle against another reference.

    The new value is value·(target circle)/(source circle); exact inputs
    stay exact because both circles are exact.
    """
    if target is angle.reference or target == angle.reference:
        return angle
    factor = target.full_circle / angle.reference.full_circle
    return AngleValue(angle.value * factor, target)


def measure_of(angle: AngleValue) -> Measure:
    """The dimensionless measure 2π·value/full_circle."""
    return Measure(angle.value * (TWO_PI / angle.reference.full_circle))


def value_from_measure(measure: Measure, reference: ReferenceAngle) -> AngleValue:
    """Inverse of measure_of: value = measure·full_circle/2π."""
    return AngleValue(measure.value * (reference.full_circle / TWO_PI), reference)


def straight_angle_coefficient(measure: Measure) -> ExactScalar:
    """How many straight angles the measure spans (measure/π)."""
    return measure.value / PI


def semigroup_add(a: Magnitude, b: Magnitude) -> Magnitude:
    """Add two non-reflex magnitudes, wrapping past the straight angle.

    Both operands must lie in (0, π].  The sum folds back into that range
    by subtracting π once when it overshoots, which keeps the operation
    closed, commutative, associative, and cancellative on exact inputs.
    """
    left = a.measure.value
    right = b.measure.value
    if left.compare(PI) > 0 or right.compare(PI) > 0:
        raise DomainError("semigroup addition needs operands in (0, π]")
    total = left + right
    if total.compare(PI) > 0:
        total = total - PI
    return Magnitude(Measure(total))


def reduce_principal(angle: AngleValue) -> AngleValue:
    """Fold a value into the principal range [0, full_circle).

    Stays exact when the input already lies in range or shares its π
    exponent with the full circle; a rational-times-π value folded
    modulo a plain rational has no exact representation here, so that
    case degrades to an inexact float.
    """
    value = angle.value
    circle = angle.reference.full_circle
    if value.is_exact:
        if value.compare(ZERO) >= 0 and value.compare(circle) < 0:
            return angle
        if value.pi_exponent == circle.pi_exponent:
            scaled = value.numerator * circle.denominator
            modulus = circle.numerator * value.denominator
            folded = ExactScalar(
                scaled % modulus,
                value.denominator * circle.denominator,
                value.pi_exponent,
            )
            return AngleValue(folded, angle.reference)
    folded_float = _fmod_positive(value.to_float(), circle.to_float())
    return AngleValue(ExactScalar.inexact(folded_float), angle.reference)


def _fmod_positive(x: float, period: float) -> float:
    r = math.fmod(x, period)
    if r < 0:
        r += period
    return r if r < period else 0.0


def classify(angle: AngleValue) -> AngleClass:
    """Name the magnitude range a value falls in.

    The input must already lie in [0, full_circle].  Exact inputs are
    classified by exact comparison; inexact ones snap to a boundary when
    within 1e-12 of it, relative to the full circle.
    """
    value = angle.value
    circle = angle.reference.full_circle
    quarter = circle / ExactScalar(4)
    half = circle / ExactScalar(2)
    if value.is_exact:
        if value.compare(ZERO) < 0 or value.compare(circle) > 0:
            raise DomainError("classification needs a value in [0, full_circle]")
        if value.is_zero:
            return AngleClass.ZERO
        against_quarter = value.compare(quarter)
        if against_quarter < 0:
            return AngleClass.ACUTE
        if against_quarter == 0:
            return AngleClass.RIGHT
        against_half = value.compare(half)
        if against_half < 0:
            return AngleClass.OBTUSE
        if against_half == 0:
            return AngleClass.STRAIGHT
        if value.compare(circle) == 0:
            return AngleClass.PERIGON
        return AngleClass.REFLEX
    f = value.to_float()
    full = circle.to_float()
    tolerance = _CLASSIFY_TOLERANCE * full
    if f < -tolerance or f > full + tolerance:
        raise DomainError("classification needs a value in [0, full_circle]")
    boundaries = (
        (0.0, AngleClass.ZERO),
        (full / 4.0, AngleClass.RIGHT),
        (full / 2.0, AngleClass.STRAIGHT),
        (full, AngleClass.PERIGON),
    )
    for boundary, angle_class in boundaries:
        if abs(f - boundary) <= tolerance:
            return angle_class
    if f < full / 4.0:
        return AngleClass.ACUTE
    if f < full / 2.0:
        return AngleClass.OBTUSE
    return AngleClass.REFLEX
