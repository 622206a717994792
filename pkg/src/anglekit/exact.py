"""Exact arithmetic over numbers of the form (n/d)·π^e.

A scalar is either exact, a reduced fraction times a power of π with
exponent −1, 0, or +1, or an explicitly flagged inexact float produced by
the few operations that cannot stay exact (mixed-exponent sums, products
whose π exponent would leave the representable range).  Inexactness is
contagious through arithmetic but never silent: `is_exact` always tells
the truth, and nothing ever rounds an exact value behind the caller's
back.

Exact components are bounded to 64 bits after normalization.  Python
integers would happily grow past that, but a component that large means
the caller is off the supported range, and raising beats quietly
producing numbers whose float conversion has lost all structure.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ExactOverflowError

__all__ = [
    "ExactScalar",
    "PI_HIGH_PRECISION",
    "ZERO",
    "ONE",
    "PI",
    "TWO_PI",
    "format_float",
]

# π to 75 decimal places.  Enough head-room to order any pair of distinct
# in-range exact values: with 64-bit components the smallest nonzero
# difference between mixed-exponent values is far above 10**-60.
PI_HIGH_PRECISION = Fraction(
    3141592653589793238462643383279502884197169399375105820974944592307816406286,
    10**75,
)

_MAX_COMPONENT = 2**63 - 1


def format_float(value: float, digits: int = 17) -> str:
    """Render a float with at most `digits` significant digits.

    At 17 digits the shortest round-tripping form is used, so reading the
    text back recovers the identical float.
    """
    if math.isinf(value) or math.isnan(value):
        return repr(value)
    if digits >= 17:
        text = repr(value)
        return text[:-2] if text.endswith(".0") else text
    return f"{value:.{digits}g}"


class ExactScalar:
    """Immutable scalar: (numerator/denominator)·π^pi_exponent, or a float.

    Exact instances keep `inexact_value` as None.  Inexact instances keep
    the numeric fields as None and carry the float in `inexact_value`.
    Instances must be treated as immutable; all arithmetic returns new
    objects.
    """

    __slots__ = ("numerator", "denominator", "pi_exponent", "inexact_value")

    def __init__(self, numerator: int, denominator: int = 1, pi_exponent: int = 0):
        if not isinstance(numerator, int) or not isinstance(denominator, int):
            raise TypeError("exact components must be integers")
        if not isinstance(pi_exponent, int):
            raise TypeError("pi_exponent must be an integer")
        if denominator == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if pi_exponent not in (-1, 0, 1):
            raise ValueError("pi_exponent must be -1, 0, or 1")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        g = math.gcd(numerator, denominator)
        numerator //= g
        denominator //= g
        if numerator == 0:
            pi_exponent = 0
        if abs(numerator) > _MAX_COMPONENT or denominator > _MAX_COMPONENT:
            raise ExactOverflowError(
                f"normalized component exceeds 64-bit bound: {numerator}/{denominator}"
            )
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)
        object.__setattr__(self, "pi_exponent", pi_exponent)
        object.__setattr__(self, "inexact_value", None)

    @classmethod
    def inexact(cls, value: float) -> "ExactScalar":
        """Wrap a float as an explicitly inexact scalar."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "numerator", None)
        object.__setattr__(obj, "denominator", None)
        object.__setattr__(obj, "pi_exponent", None)
        object.__setattr__(obj, "inexact_value", float(value))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # ------------------------------------------------------------------
    # basic queries

    @property
    def is_exact(self) -> bool:
        return self.inexact_value is None

    @property
    def is_zero(self) -> bool:
        if self.is_exact:
            return self.numerator == 0
        return self.inexact_value == 0.0

    def _is_exact_zero(self) -> bool:
        return self.is_exact and self.numerator == 0

    def to_float(self) -> float:
        """Correctly rounded float conversion.

        π-carrying values are evaluated through the high-precision π
        substitute, so only the final float conversion rounds.  Chaining
        float operations instead (multiply by π, then divide) can drift
        2 ulp from the correctly rounded value, which is too sloppy for
        a type whose whole point is accounting for every rounding.
        """
        if not self.is_exact:
            return self.inexact_value
        if self.pi_exponent == 0:
            return self.numerator / self.denominator
        return float(self._precise())

    def _precise(self):
        """High-precision value: a Fraction, or the raw float if non-finite.

        Exact values substitute PI_HIGH_PRECISION for π, which preserves
        the ordering of any two distinct representable values.
        """
        if self.is_exact:
            q = Fraction(self.numerator, self.denominator)
            if self.pi_exponent == 1:
                return q * PI_HIGH_PRECISION
            if self.pi_exponent == -1:
                return q / PI_HIGH_PRECISION
            return q
        if math.isinf(self.inexact_value) or math.isnan(self.inexact_value):
            return self.inexact_value
        return Fraction(self.inexact_value)

    # ------------------------------------------------------------------
    # arithmetic

    @staticmethod
    def _coerce(value) -> "ExactScalar":
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, int):
            return ExactScalar(value)
        if isinstance(value, Fraction):
            return ExactScalar(value.numerator, value.denominator)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact and other.is_exact:
            if self._is_exact_zero():
                return other
            if other._is_exact_zero():
                return self
            if self.pi_exponent == other.pi_exponent:
                return ExactScalar(
                    self.numerator * other.denominator
                    + other.numerator * self.denominator,
                    self.denominator * other.denominator,
                    self.pi_exponent,
                )
        return ExactScalar.inexact(self.to_float() + other.to_float())

    __radd__ = __add__

    def __neg__(self):
        if self.is_exact:
            return ExactScalar(-self.numerator, self.denominator, self.pi_exponent)
        return ExactScalar.inexact(-self.inexact_value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact and other.is_exact:
            exponent = self.pi_exponent + other.pi_exponent
            numerator = self.numerator * other.numerator
            if numerator == 0 or -1 <= exponent <= 1:
                return ExactScalar(
                    numerator, self.denominator * other.denominator, 0 if numerator == 0 else exponent
                )
        return ExactScalar.inexact(self.to_float() * other.to_float())

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero scalar")
        if self.is_exact and other.is_exact:
            exponent = self.pi_exponent - other.pi_exponent
            if self.numerator == 0 or -1 <= exponent <= 1:
                return ExactScalar(
                    self.numerator * other.denominator,
                    self.denominator * other.numerator,
                    0 if self.numerator == 0 else exponent,
                )
        return ExactScalar.inexact(self.to_float() / other.to_float())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # ------------------------------------------------------------------
    # comparison

    def compare(self, other) -> int:
        """Three-way comparison: −1, 0, or +1.

        Same-exponent exact pairs compare by cross-multiplication.  Every
        other pairing is decided through the high-precision π substitute,
        which cannot misorder representable values.  NaN refuses to order.
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare ExactScalar with {type(other).__name__}")
        if (
            self.is_exact
            and other.is_exact
            and self.pi_exponent == other.pi_exponent
        ):
            lhs = self.numerator * other.denominator
            rhs = other.numerator * self.denominator
            return (lhs > rhs) - (lhs < rhs)
        a = self._precise()
        b = other._precise()
        if isinstance(a, float) and math.isnan(a) or isinstance(b, float) and math.isnan(b):
            raise ValueError("cannot order NaN")
        return (a > b) - (a < b)

    def __eq__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        try:
            return self.compare(coerced) == 0
        except ValueError:
            return False

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __hash__(self):
        # Equal values must hash equal: exact π-free values equal ints,
        # Fractions, and (when representable) floats, so defer to
        # Fraction's hash; π-carrying values only ever equal each other.
        if self.is_exact:
            if self.pi_exponent == 0:
                return hash(Fraction(self.numerator, self.denominator))
            return hash((self.numerator, self.denominator, self.pi_exponent))
        return hash(self.inexact_value)

    def __bool__(self):
        return not self.is_zero

    # ------------------------------------------------------------------
    # rendering

    def render(self, ascii_only: bool = False) -> str:
        """Human form: "3π/4", "π", "42", "7/2", "1/(2π)", "180/π".

        Inexact values render as a shortest-form float.  With
        `ascii_only` the π glyph becomes "pi".
        """
        if not self.is_exact:
            return format_float(self.inexact_value)
        pi_text = "pi" if ascii_only else "π"
        n, d, e = self.numerator, self.denominator, self.pi_exponent
        if e == 0:
            return str(n) if d == 1 else f"{n}/{d}"
        if e == 1:
            sign = "-" if n < 0 else ""
            coefficient = "" if abs(n) == 1 else str(abs(n))
            head = f"{sign}{coefficient}{pi_text}"
            return head if d == 1 else f"{head}/{d}"
        if d == 1:
            return f"{n}/{pi_text}"
        return f"{n}/({d}{pi_text})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        if self.is_exact:
            return (
                f"ExactScalar({self.numerator}, {self.denominator}, "
                f"pi_exponent={self.pi_exponent})"
            )
        return f"ExactScalar.inexact({self.inexact_value!r})"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
PI = ExactScalar(1, 1, 1)
TWO_PI = ExactScalar(2, 1, 1)
