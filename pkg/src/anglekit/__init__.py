"""Exact angle arithmetic, reference-angle conversions, and notation tools.

The package keeps angle values exact wherever mathematics allows it: a
scalar is a reduced fraction times a power of π, and only operations
that genuinely leave that form (mixed sums, general trig) fall back to
explicitly flagged floats.  On top of that sit reference angles (radian,
degree, gon, turn, arcminute, arcsecond), dimensionless measures,
geometric magnitudes, period-parameterized trig functions, text parsing
and formatting, a notation linter, and a command line front end.
"""

from .angles import (
    ARCMINUTE,
    ARCSECOND,
    BUILTIN_REFERENCES,
    DEGREE,
    GON,
    RADIAN,
    TURN,
    AngleClass,
    AngleValue,
    Magnitude,
    Measure,
    ReferenceAngle,
    classify,
    convert,
    find_reference,
    measure_of,
    reduce_principal,
    semigroup_add,
    straight_angle_coefficient,
    value_from_measure,
)
from .errors import (
    AngleKitError,
    DegenerateVertexError,
    DomainError,
    ExactOverflowError,
    MissingUnitError,
    ParseError,
    PoleError,
    UnknownUnitError,
    UnsupportedFormError,
    ZeroAngleError,
)
from .exact import PI, TWO_PI, ExactScalar
from .geometry import (
    ArcSpec,
    PlanarPoint,
    angle_from_points,
    arc_length,
    chord_integral,
    chord_integral_inverse,
    chord_length,
    congruent,
)
from .lint import (
    ALL_RULES,
    RULE_MAGNITUDE_AS_QUOTIENT,
    RULE_MISSING_REFERENCE_SYMBOL,
    RULE_RAD_IN_TRIG_ARG,
    LintFinding,
    lint_text,
)
from .textio import (
    AngleLiteral,
    format_angle,
    parse_angle,
    parse_expression,
    parse_number,
)
from .trig import (
    PeriodizedFunction,
    UnitCirclePoint,
    eval_inverse,
    eval_periodized,
    phase,
    pythagorean_residual,
)

__version__ = "0.1.0"

__all__ = [
    "ARCMINUTE",
    "ARCSECOND",
    "ALL_RULES",
    "AngleClass",
    "AngleKitError",
    "AngleLiteral",
    "AngleValue",
    "ArcSpec",
    "BUILTIN_REFERENCES",
    "DEGREE",
    "DegenerateVertexError",
    "DomainError",
    "ExactOverflowError",
    "ExactScalar",
    "GON",
    "LintFinding",
    "Magnitude",
    "Measure",
    "MissingUnitError",
    "PI",
    "ParseError",
    "PeriodizedFunction",
    "PlanarPoint",
    "PoleError",
    "RADIAN",
    "RULE_MAGNITUDE_AS_QUOTIENT",
    "RULE_MISSING_REFERENCE_SYMBOL",
    "RULE_RAD_IN_TRIG_ARG",
    "ReferenceAngle",
    "TURN",
    "TWO_PI",
    "UnitCirclePoint",
    "UnknownUnitError",
    "UnsupportedFormError",
    "ZeroAngleError",
    "angle_from_points",
    "arc_length",
    "chord_integral",
    "chord_integral_inverse",
    "chord_length",
    "classify",
    "congruent",
    "convert",
    "eval_inverse",
    "eval_periodized",
    "find_reference",
    "format_angle",
    "lint_text",
    "measure_of",
    "parse_angle",
    "parse_expression",
    "parse_number",
    "phase",
    "pythagorean_residual",
    "reduce_principal",
    "semigroup_add",
    "straight_angle_coefficient",
    "value_from_measure",
]
