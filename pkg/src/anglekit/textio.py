"""Text input and output for angles, plus a small expression language.

Accepted angle literals (leading/trailing whitespace allowed):

    number    := decimal | fraction | pi-form
    decimal   := digits ["." digits] [("e"|"E") [sign] digits]
    fraction  := [sign] integer "/" posint
    pi-form   := [sign] [coefficient] ("π"|"pi") ["/" posint]
               | [sign] integer "/" "(" [posint] ("π"|"pi") ")"
               | [sign] integer "/" ("π"|"pi")
    angle     := number unit | dms
    dms       := [sign] digits ("°"|"d") [digits ("′"|"m") [decimal ("″"|"s")]]

Units answer to their symbol or name: rad/radian, °/deg/degree, gon,
turn, ′/arcmin/arcminute, ″/arcsec/arcsecond.

Decimal literals with at most 15 significant digits (trailing fractional
zeros ignored) become exact rationals; longer ones become flagged
inexact floats.  Formatting an exact value and parsing the result always
recovers the identical value.

The expression language used by the linter shares the number syntax but
treats "/" strictly as an operator; it adds identifiers, "+", "*", "=",
parentheses, function application (sin, cos, tan, arcsin, arccos, exp),
and quantities (a number immediately followed by a unit).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .angles import (
    DEGREE,
    AngleValue,
    ReferenceAngle,
    ascii_symbol,
    find_reference,
)
from .errors import (
    ExactOverflowError,
    MissingUnitError,
    ParseError,
    UnknownUnitError,
    UnsupportedFormError,
)
from .exact import PI, ExactScalar, format_float

__all__ = [
    "AngleLiteral",
    "parse_angle",
    "parse_number",
    "format_angle",
    "ANGLE_FORMS",
    "ExpressionNode",
    "NumberLiteral",
    "QuantityLiteral",
    "Identifier",
    "FunctionApplication",
    "BinaryOperation",
    "FUNCTION_NAMES",
    "parse_expression",
    "walk",
]

ANGLE_FORMS = ("decimal", "symbolic_pi", "dms")

FUNCTION_NAMES = frozenset({"sin", "cos", "tan", "arcsin", "arccos", "exp"})

_EXACT_DIGIT_LIMIT = 15
_MAX_NESTING = 100

_DECIMAL_RE = re.compile(r"\d+(?:\.(\d+))?(?:[eE][+-]?\d+)?")

_DMS_RE = re.compile(
    r"\s*(?P<sign>[+-])?(?P<deg>\d+)(?:°|d)"
    r"(?:(?P<min>\d+)(?:′|m)"
    r"(?:(?P<sec>\d+(?:\.\d+)?)(?:″|s))?"
    r")?\s*\Z"
)

# Longest tokens first so "arcminute" is not cut off at "arcmin".
_UNIT_TOKENS = sorted(
    ("rad", "radian", "°", "deg", "degree", "gon", "turn",
     "′", "arcmin", "arcminute", "″", "arcsec", "arcsecond"),
    key=len,
    reverse=True,
)


@dataclass(frozen=True)
class AngleLiteral:
    """A parsed angle: the raw text, its value, and the form it used."""

    raw: str
    parsed: AngleValue
    form: str


# ----------------------------------------------------------------------
# number scanning (shared by angle literals and the expression lexer)


def _skip_space(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _match_pi(text: str, i: int) -> int | None:
    """End offset of a π token at i, or None."""
    if text.startswith("π", i):
        return i + 1
    if text.startswith("pi", i):
        end = i + 2
        if end < len(text) and (text[end].isalpha() or text[end] == "_"):
            return None
        return end
    return None


def _decimal_to_scalar(text: str, position: int) -> ExactScalar:
    """Exact conversion of a decimal literal when it is short enough.

    At most 15 significant digits (trailing fractional zeros stripped
    first) guarantee an exact in-range rational; anything longer, or
    anything whose exact form overflows the 64-bit components, degrades
    to a flagged inexact float.  Values outside float range are errors.
    """
    mantissa, _, exponent_text = text.partition("e")
    if "e" not in text:
        mantissa, _, exponent_text = text.partition("E")
    int_part, _, frac_part = mantissa.partition(".")
    significant = (int_part + frac_part.rstrip("0")).lstrip("0").rstrip("0")
    shift = int(exponent_text) if exponent_text else 0
    # A shift past ~30 cannot fit the 64-bit exact components anyway, and
    # computing 10**shift for an absurd exponent must not be attempted.
    if len(significant) <= _EXACT_DIGIT_LIMIT and abs(shift) <= 30:
        frac_trimmed = frac_part.rstrip("0")
        value = Fraction(int(int_part + frac_trimmed or "0"), 10 ** len(frac_trimmed))
        if shift:
            value *= Fraction(10) ** shift
        try:
            return ExactScalar(value.numerator, value.denominator)
        except ExactOverflowError:
            pass
    approx = float(text)
    if not math.isfinite(approx):
        raise ParseError("number is outside float range", position)
    return ExactScalar.inexact(approx)


def _scan_number(
    text: str, i: int, allow_slash: bool = True
) -> tuple[ExactScalar, bool, int]:
    """Scan one number at offset i.

    Returns (value, saw_pi, end).  With allow_slash false the "/" forms
    are left untouched for an enclosing expression parser.
    """
    start = i
    sign = 1
    if i < len(text) and text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1
    pi_end = _match_pi(text, i)
    if pi_end is not None:
        i = pi_end
        value = ExactScalar(sign, 1, 1)
        if allow_slash and text.startswith("/", i):
            denominator, i = _scan_posint(text, i + 1)
            value = _exact_or_error(sign, denominator, 1, start)
        return value, True, i
    m = _DECIMAL_RE.match(text, i)
    if m is None:
        raise ParseError("expected a number", start)
    coefficient_text = m.group()
    i = m.end()
    plain_integer = coefficient_text.isdigit()
    pi_end = _match_pi(text, i)
    if pi_end is not None:
        i = pi_end
        value = _attach_pi(coefficient_text, sign, start)
        if allow_slash and text.startswith("/", i):
            denominator, i = _scan_posint(text, i + 1)
            try:
                value = value / ExactScalar(denominator)
            except ExactOverflowError as exc:
                raise ParseError(str(exc), start) from None
        return value, True, i
    if allow_slash and text.startswith("/", i):
        after = i + 1
        if not plain_integer:
            raise ParseError("fraction numerator must be an integer", start)
        numerator = sign * int(coefficient_text)
        pi_end = _match_pi(text, after)
        if pi_end is not None:
            # n/π
            return _exact_or_error(numerator, 1, -1, start), True, pi_end
        if text.startswith("(", after):
            j = after + 1
            dm = re.compile(r"\d+").match(text, j)
            denominator = 1
            if dm is not None:
                denominator = int(dm.group())
                j = dm.end()
            pi_end = _match_pi(text, j)
            if pi_end is None:
                raise ParseError("expected π in parenthesized denominator", j)
            j = pi_end
            if not text.startswith(")", j):
                raise ParseError("expected ')'", j)
            return _exact_or_error(numerator, denominator, -1, start), True, j + 1
        if after < len(text) and text[after].isdigit():
            denominator, j = _scan_posint(text, after)
            pi_end = _match_pi(text, j)
            if pi_end is not None:
                # n/dπ reads as (n/d)·π
                return _exact_or_error(numerator, denominator, 1, start), True, pi_end
            return _exact_or_error(numerator, denominator, 0, start), False, j
        raise ParseError("expected a denominator", after)
    value = _decimal_to_scalar(coefficient_text, start)
    if sign < 0:
        value = -value
    return value, False, i


def _scan_posint(text: str, i: int) -> tuple[int, int]:
    m = re.compile(r"\d+").match(text, i)
    if m is None:
        raise ParseError("expected a positive integer", i)
    value = int(m.group())
    if value == 0:
        raise ParseError("denominator must be positive", i)
    return value, m.end()


def _attach_pi(coefficient_text: str, sign: int, position: int) -> ExactScalar:
    coefficient = _decimal_to_scalar(coefficient_text, position)
    if sign < 0:
        coefficient = -coefficient
    return coefficient * PI


def _exact_or_error(
    numerator: int, denominator: int, exponent: int, position: int
) -> ExactScalar:
    if denominator == 0:
        raise ParseError("denominator must be positive", position)
    try:
        return ExactScalar(numerator, denominator, exponent)
    except ExactOverflowError as exc:
        raise ParseError(str(exc), position) from None


# ----------------------------------------------------------------------
# angle literals


def parse_number(text: str) -> ExactScalar:
    """Parse a bare number (no unit)."""
    i = _skip_space(text, 0)
    if i == len(text):
        raise ParseError("empty input", i)
    value, _, i = _scan_number(text, i)
    i = _skip_space(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing text", i)
    return value


def parse_angle(text: str) -> AngleLiteral:
    """Parse an angle literal: a number with a unit, or a sexagesimal form."""
    m = _DMS_RE.match(text)
    if m is not None:
        return AngleLiteral(text, _dms_value(m), "dms")
    i = _skip_space(text, 0)
    if i == len(text):
        raise ParseError("empty input", i)
    value, saw_pi, i = _scan_number(text, i)
    i = _skip_space(text, i)
    reference, i = _scan_unit(text, i)
    i = _skip_space(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing text", i)
    form = "symbolic_pi" if saw_pi else "decimal"
    return AngleLiteral(text, AngleValue(value, reference), form)


def _scan_unit(text: str, i: int) -> tuple[ReferenceAngle, int]:
    for token in _UNIT_TOKENS:
        if text.startswith(token, i):
            end = i + len(token)
            if token[-1].isalpha() and end < len(text) and (
                text[end].isalpha() or text[end] == "_"
            ):
                continue
            reference = find_reference(token)
            return reference, end
    if i >= len(text):
        raise MissingUnitError("angle needs a unit symbol", i)
    chunk = re.match(r"\S+", text[i:]).group()
    raise UnknownUnitError(f"unknown unit {chunk!r}", i)


def _dms_value(m: re.Match) -> AngleValue:
    sign = -1 if m.group("sign") == "-" else 1
    degrees = int(m.group("deg"))
    minutes = int(m.group("min") or 0)
    seconds_text = m.group("sec")
    seconds = (
        _decimal_to_scalar(seconds_text, m.start("sec")) if seconds_text else None
    )
    if seconds is None or seconds.is_exact:
        total = Fraction(degrees) + Fraction(minutes, 60)
        if seconds is not None:
            total += Fraction(seconds.numerator, seconds.denominator) / 3600
        try:
            value = ExactScalar(sign * total.numerator, total.denominator)
            return AngleValue(value, DEGREE)
        except ExactOverflowError:
            pass
    seconds_float = seconds.to_float() if seconds is not None else 0.0
    approx = sign * (degrees + minutes / 60.0 + seconds_float / 3600.0)
    if not math.isfinite(approx):
        raise ParseError("number is outside float range", m.start("deg"))
    return AngleValue(ExactScalar.inexact(approx), DEGREE)


# ----------------------------------------------------------------------
# formatting


def format_angle(
    angle: AngleValue,
    form: str = "symbolic_pi",
    digits: int = 17,
    ascii_only: bool = False,
) -> str:
    """Render an angle in one of the forms in ANGLE_FORMS.

    Exact values always round-trip: parse_angle(format_angle(v, form))
    recovers v bit for bit, falling back to the symbolic spelling when a
    value has no finite rendering in the requested form.
    """
    if form not in ANGLE_FORMS:
        raise ValueError(f"form must be one of {ANGLE_FORMS}")
    if not 1 <= digits <= 17:
        raise ValueError("digits must be between 1 and 17")
    if form == "dms":
        return _format_dms(angle, digits, ascii_only)
    unit = ascii_symbol(angle.reference) if ascii_only else angle.reference.symbol
    value = angle.value
    if form == "symbolic_pi" or not value.is_exact:
        if value.is_exact:
            body = value.render(ascii_only)
        else:
            body = format_float(value.inexact_value, digits)
        return f"{body} {unit}"
    body = _exact_decimal_text(value)
    if body is None:
        body = value.render(ascii_only)
    return f"{body} {unit}"


def _exact_decimal_text(value: ExactScalar) -> str | None:
    """Terminating decimal for an exact rational, or None.

    None when a π factor is present, the expansion does not terminate,
    or it would take more significant digits than parse guarantees to
    read back exactly.
    """
    if value.pi_exponent != 0:
        return None
    numerator, denominator = value.numerator, value.denominator
    twos = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    fives = 0
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return None
    places = max(twos, fives)
    scaled = abs(numerator) * 2 ** (places - twos) * 5 ** (places - fives)
    digits_text = str(scaled)
    if len(digits_text.strip("0")) > _EXACT_DIGIT_LIMIT:
        return None
    sign = "-" if numerator < 0 else ""
    if places == 0:
        return sign + digits_text
    digits_text = digits_text.rjust(places + 1, "0")
    fractional = digits_text[-places:].rstrip("0")
    body = digits_text[:-places]
    return sign + body + ("." + fractional if fractional else "")


def _format_dms(angle: AngleValue, digits: int, ascii_only: bool) -> str:
    if angle.reference != DEGREE:
        raise UnsupportedFormError("sexagesimal output needs a degree angle")
    deg_mark, min_mark, sec_mark = ("d", "m", "s") if ascii_only else ("°", "′", "″")
    value = angle.value
    if value.is_exact:
        if value.pi_exponent != 0:
            raise UnsupportedFormError("value carries a π factor; no sexagesimal form")
        total = Fraction(abs(value.numerator), value.denominator)
        sign = "-" if value.numerator < 0 else ""
        degrees = int(total)
        rest = (total - degrees) * 60
        minutes = int(rest)
        seconds = (rest - minutes) * 60
        if seconds == 0:
            if minutes == 0:
                return f"{sign}{degrees}{deg_mark}"
            return f"{sign}{degrees}{deg_mark}{minutes}{min_mark}"
        seconds_text = _exact_decimal_text(
            ExactScalar(seconds.numerator, seconds.denominator)
        )
        if seconds_text is None:
            raise UnsupportedFormError("seconds do not terminate in this base")
        return (
            f"{sign}{degrees}{deg_mark}{minutes}{min_mark}{seconds_text}{sec_mark}"
        )
    f = value.inexact_value
    if not math.isfinite(f):
        raise UnsupportedFormError("non-finite value has no sexagesimal form")
    sign = "-" if f < 0 else ""
    magnitude = abs(f)
    degrees = int(magnitude)
    rest = (magnitude - degrees) * 60.0
    minutes = int(rest)
    seconds = (rest - minutes) * 60.0
    seconds_text = format_float(seconds, min(digits, 17))
    if float(seconds_text) >= 60.0:
        seconds_text = "0"
        minutes += 1
        if minutes >= 60:
            minutes = 0
            degrees += 1
    return f"{sign}{degrees}{deg_mark}{minutes}{min_mark}{seconds_text}{sec_mark}"


# ----------------------------------------------------------------------
# expression language


@dataclass(frozen=True)
class ExpressionNode:
    position: int


@dataclass(frozen=True)
class NumberLiteral(ExpressionNode):
    value: ExactScalar


@dataclass(frozen=True)
class QuantityLiteral(ExpressionNode):
    value: ExactScalar
    reference: ReferenceAngle
    unit_text: str


@dataclass(frozen=True)
class Identifier(ExpressionNode):
    name: str


@dataclass(frozen=True)
class FunctionApplication(ExpressionNode):
    name: str
    argument: ExpressionNode


@dataclass(frozen=True)
class BinaryOperation(ExpressionNode):
    operator: str  # one of + * / =
    left: ExpressionNode
    right: ExpressionNode


def walk(node: ExpressionNode):
    """Yield node and every descendant, preorder."""
    yield node
    if isinstance(node, FunctionApplication):
        yield from walk(node.argument)
    elif isinstance(node, BinaryOperation):
        yield from walk(node.left)
        yield from walk(node.right)


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER WORD UNIT OP END
    text: str
    position: int
    value: ExactScalar | None = None


_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_UNIT_SYMBOLS = ("°", "′", "″")


def _lex(text: str, offset: int) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        position = offset + i
        if ch in "+-":
            nxt = i + 1
            sign_opens_number = (
                nxt < len(text)
                and (text[nxt].isdigit() or _match_pi(text, nxt) is not None)
                and (
                    not tokens
                    or (tokens[-1].kind == "OP" and tokens[-1].text != ")")
                )
            )
            if not sign_opens_number:
                if ch == "+":
                    tokens.append(_Token("OP", ch, position))
                    i += 1
                    continue
                raise ParseError("unexpected character '-'", position)
            value, _, end = _scan_number(text, i, allow_slash=False)
            tokens.append(_Token("NUMBER", text[i:end], position, value))
            i = end
            continue
        if ch.isdigit() or _match_pi(text, i) is not None:
            value, _, end = _scan_number(text, i, allow_slash=False)
            tokens.append(_Token("NUMBER", text[i:end], position, value))
            i = end
            continue
        if ch in "*/=()":
            tokens.append(_Token("OP", ch, position))
            i += 1
            continue
        if ch in _UNIT_SYMBOLS:
            tokens.append(_Token("UNIT", ch, position))
            i += 1
            continue
        m = _WORD_RE.match(text, i)
        if m is not None:
            tokens.append(_Token("WORD", m.group(), position))
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", position)
    tokens.append(_Token("END", "", offset + len(text)))
    return tokens


class _ExpressionParser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def parse(self) -> ExpressionNode:
        node = self.equality()
        tail = self.peek()
        if tail.kind != "END":
            raise ParseError("unexpected trailing text", tail.position)
        return node

    def equality(self) -> ExpressionNode:
        left = self.sum_()
        token = self.peek()
        if token.kind == "OP" and token.text == "=":
            self.advance()
            right = self.sum_()
            after = self.peek()
            if after.kind == "OP" and after.text == "=":
                raise ParseError("chained '=' is not allowed", after.position)
            return BinaryOperation(token.position, "=", left, right)
        return left

    def sum_(self) -> ExpressionNode:
        node = self.term()
        while True:
            token = self.peek()
            if token.kind == "OP" and token.text == "+":
                self.advance()
                node = BinaryOperation(token.position, "+", node, self.term())
            else:
                return node

    def term(self) -> ExpressionNode:
        node = self.primary()
        while True:
            token = self.peek()
            if token.kind == "OP" and token.text in ("*", "/"):
                self.advance()
                node = BinaryOperation(token.position, token.text, node, self.primary())
            else:
                return node

    def primary(self) -> ExpressionNode:
        token = self.peek()
        if token.kind == "NUMBER":
            self.advance()
            return self.maybe_quantity(token)
        if token.kind == "WORD":
            self.advance()
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "(":
                if token.text not in FUNCTION_NAMES:
                    raise ParseError(f"unknown function '{token.text}'", token.position)
                self.advance()
                self.depth += 1
                if self.depth > _MAX_NESTING:
                    raise ParseError("expression nests too deeply", token.position)
                argument = self.equality()
                closing = self.peek()
                if not (closing.kind == "OP" and closing.text == ")"):
                    raise ParseError("expected ')'", closing.position)
                self.advance()
                self.depth -= 1
                return FunctionApplication(token.position, token.text, argument)
            return Identifier(token.position, token.text)
        if token.kind == "OP" and token.text == "(":
            self.advance()
            self.depth += 1
            if self.depth > _MAX_NESTING:
                raise ParseError("expression nests too deeply", token.position)
            node = self.equality()
            closing = self.peek()
            if not (closing.kind == "OP" and closing.text == ")"):
                raise ParseError("expected ')'", closing.position)
            self.advance()
            self.depth -= 1
            return node
        if token.kind == "UNIT":
            raise ParseError("unit symbol needs a number before it", token.position)
        raise ParseError("expected a value", token.position)

    def maybe_quantity(self, number: _Token) -> ExpressionNode:
        token = self.peek()
        if token.kind == "UNIT":
            self.advance()
            reference = find_reference(token.text)
            return QuantityLiteral(
                number.position, number.value, reference, token.text
            )
        if token.kind == "WORD":
            reference = find_reference(token.text)
            if reference is not None:
                self.advance()
                return QuantityLiteral(
                    number.position, number.value, reference, token.text
                )
        return NumberLiteral(number.position, number.value)


def parse_expression(text: str, offset: int = 0) -> ExpressionNode:
    """Parse one expression; positions are absolute (offset + local)."""
    tokens = _lex(text, offset)
    if tokens[0].kind == "END":
        raise ParseError("empty expression", offset)
    return _ExpressionParser(tokens).parse()
