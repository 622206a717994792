"""Command line interface.

Subcommands: convert, measure, arc, chord, add, points, trig, classify,
table, lint.  Each accepts --format {human,records}, --ascii, and
--digits N after the subcommand name.  records mode prints one
key=value pair per line with stable keys, suitable for scripting.

Exit codes:
    0  success
    1  lint findings were reported
    2  input could not be parsed (also argparse usage errors)
    3  unknown or missing unit
    4  bad radius
    5  value out of the accepted range
    6  domain error (trig pole, inverse argument, semigroup operand,
       degenerate geometry, unit-bearing trig argument)
    70 unexpected internal failure
"""

from __future__ import annotations

import argparse
import math
import sys

from .angles import (
    BUILTIN_REFERENCES,
    AngleValue,
    Magnitude,
    ascii_symbol,
    classify,
    convert,
    find_reference,
    measure_of,
    semigroup_add,
)
from .errors import (
    AngleKitError,
    DomainError,
    MissingUnitError,
    ParseError,
    PoleError,
    UnknownUnitError,
)
from .exact import ExactScalar, format_float
from .geometry import (
    ArcSpec,
    PlanarPoint,
    angle_from_points,
    arc_length,
    chord_length,
)
from .lint import lint_text
from .textio import parse_angle, parse_number
from .trig import PeriodizedFunction, eval_inverse, eval_periodized

EXIT_OK = 0
EXIT_LINT = 1
EXIT_PARSE = 2
EXIT_UNIT = 3
EXIT_RADIUS = 4
EXIT_RANGE = 5
EXIT_DOMAIN = 6
EXIT_INTERNAL = 70

_FORWARD_KINDS = ("sin", "cos", "tan")
_INVERSE_KINDS = ("arcsin", "arccos")


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _digits_arg(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError("digits must be between 1 and 17")
    return value


def _scalar_text(value: ExactScalar, args) -> str:
    if value.is_exact:
        return value.render(ascii_only=args.ascii)
    return format_float(value.inexact_value, args.digits)


def _unit_text(reference, args) -> str:
    return ascii_symbol(reference) if args.ascii else reference.symbol


def _emit(args, human: str, records: list[tuple[str, str]]) -> None:
    if args.format == "records":
        for key, value in records:
            print(f"{key}={value}")
    else:
        print(human)


def _parse_angle_arg(text: str) -> AngleValue:
    return parse_angle(text).parsed


def _resolve_unit(token: str):
    reference = find_reference(token)
    if reference is None:
        raise _Failure(EXIT_UNIT, f"unknown unit {token!r}")
    return reference


def _radius_arg(text: str) -> float:
    try:
        radius = float(text)
    except ValueError:
        raise _Failure(EXIT_PARSE, f"radius {text!r} is not a number") from None
    if not math.isfinite(radius) or radius <= 0.0:
        raise _Failure(EXIT_RADIUS, "radius must be positive and finite")
    return radius


def _exact_radius(radius: float) -> ExactScalar:
    from fractions import Fraction

    try:
        as_fraction = Fraction(radius)
        return ExactScalar(as_fraction.numerator, as_fraction.denominator)
    except (OverflowError, ValueError):
        return ExactScalar.inexact(radius)


# ----------------------------------------------------------------------
# subcommands


def _cmd_convert(args) -> int:
    angle = _parse_angle_arg(args.angle)
    target = _resolve_unit(args.unit)
    result = convert(angle, target)
    body = _scalar_text(result.value, args)
    unit = _unit_text(target, args)
    _emit(
        args,
        f"{body} {unit}",
        [
            ("value", body),
            ("unit", unit),
            ("exact", "true" if result.value.is_exact else "false"),
        ],
    )
    return EXIT_OK


def _cmd_measure(args) -> int:
    angle = _parse_angle_arg(args.angle)
    measure = measure_of(angle)
    body = _scalar_text(measure.value, args)
    _emit(
        args,
        body,
        [
            ("measure", body),
            ("exact", "true" if measure.value.is_exact else "false"),
        ],
    )
    return EXIT_OK


def _cmd_arc(args) -> int:
    angle = _parse_angle_arg(args.angle)
    radius = _radius_arg(args.radius)
    measure = measure_of(angle)
    try:
        arc = ArcSpec(radius, measure)
    except DomainError as exc:
        raise _Failure(EXIT_RANGE, str(exc)) from None
    length = arc_length(arc)
    body = format_float(length, args.digits)
    records = [("length", body)]
    human = body
    exact_total = measure.value * _exact_radius(radius)
    if exact_total.is_exact:
        symbolic = exact_total.render(ascii_only=args.ascii)
        human = f"{body} (exactly {symbolic})"
        records.append(("exact", symbolic))
    _emit(args, human, records)
    return EXIT_OK


def _cmd_chord(args) -> int:
    angle = _parse_angle_arg(args.angle)
    radius = _radius_arg(args.radius)
    try:
        length = chord_length(angle, radius)
    except DomainError as exc:
        raise _Failure(EXIT_RANGE, str(exc)) from None
    body = format_float(length, args.digits)
    _emit(args, body, [("chord", body)])
    return EXIT_OK


def _cmd_add(args) -> int:
    first = _parse_angle_arg(args.first)
    second = _parse_angle_arg(args.second)
    try:
        total = semigroup_add(
            Magnitude(measure_of(first)), Magnitude(measure_of(second))
        )
    except DomainError as exc:
        raise _Failure(EXIT_DOMAIN, str(exc)) from None
    body = _scalar_text(total.measure.value, args)
    _emit(
        args,
        body,
        [
            ("measure", body),
            ("exact", "true" if total.measure.value.is_exact else "false"),
        ],
    )
    return EXIT_OK


def _cmd_points(args) -> int:
    coordinates = []
    for text in (args.px, args.py, args.vx, args.vy, args.qx, args.qy):
        try:
            coordinates.append(float(text))
        except ValueError:
            raise _Failure(EXIT_PARSE, f"coordinate {text!r} is not a number") from None
    try:
        p = PlanarPoint(coordinates[0], coordinates[1])
        vertex = PlanarPoint(coordinates[2], coordinates[3])
        q = PlanarPoint(coordinates[4], coordinates[5])
        magnitude = angle_from_points(p, vertex, q)
    except DomainError as exc:
        raise _Failure(EXIT_DOMAIN, str(exc)) from None
    body = format_float(magnitude.measure.value.to_float(), args.digits)
    _emit(args, body, [("measure", body)])
    return EXIT_OK


def _cmd_trig(args) -> int:
    period = _parse_period(args.period)
    if args.function in _FORWARD_KINDS:
        value = _trig_argument(args.argument)
        try:
            result = eval_periodized(PeriodizedFunction(args.function, period), value)
        except PoleError as exc:
            raise _Failure(EXIT_DOMAIN, str(exc)) from None
        body = format_float(result, args.digits)
        _emit(args, body, [("value", body)])
        return EXIT_OK
    ratio = _trig_argument(args.argument)
    try:
        result = eval_inverse(args.function, period, ratio)
    except DomainError as exc:
        raise _Failure(EXIT_DOMAIN, str(exc)) from None
    body = _scalar_text(result.value, args)
    unit = _unit_text(result.reference, args)
    _emit(
        args,
        f"{body} {unit}",
        [("value", body), ("unit", unit)],
    )
    return EXIT_OK


def _parse_period(text: str) -> ExactScalar:
    period = parse_number(text)
    if not period.is_exact:
        raise _Failure(EXIT_DOMAIN, "period must be an exact number")
    if period.compare(ExactScalar(0)) <= 0:
        raise _Failure(EXIT_DOMAIN, "period must be positive")
    return period


def _trig_argument(text: str) -> float:
    try:
        return parse_number(text).to_float()
    except ParseError:
        pass
    try:
        literal = parse_angle(text)
    except ParseError:
        raise _Failure(EXIT_PARSE, f"could not parse number {text!r}") from None
    raise _Failure(
        EXIT_DOMAIN,
        "RAD-IN-TRIG-ARG: argument carries the unit "
        f"'{literal.parsed.reference.symbol}'; pass the dimensionless measure",
    )


def _cmd_classify(args) -> int:
    angle = _parse_angle_arg(args.angle)
    try:
        result = classify(angle)
    except DomainError as exc:
        raise _Failure(EXIT_RANGE, str(exc)) from None
    _emit(args, result.value, [("class", result.value)])
    return EXIT_OK


def _cmd_table(args) -> int:
    names = [ref.name for ref in BUILTIN_REFERENCES]
    cells: dict[tuple[str, str], str] = {}
    for source in BUILTIN_REFERENCES:
        for target in BUILTIN_REFERENCES:
            factor = target.full_circle / source.full_circle
            cells[(source.name, target.name)] = factor.render(ascii_only=args.ascii)
    if args.format == "records":
        for source in names:
            for target in names:
                print(f"{source}->{target}={cells[(source, target)]}")
        return EXIT_OK
    header = ["from\\to"] + names
    rows = [header]
    for source in names:
        rows.append([source] + [cells[(source, target)] for target in names])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return EXIT_OK


def _cmd_lint(args) -> int:
    if args.path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise _Failure(EXIT_PARSE, f"cannot read {args.path!r}: {exc}") from None
    findings = lint_text(text)
    for finding in findings:
        rule = finding.rule or "syntax"
        line = f"{finding.line}:{finding.column}: {rule}: {finding.message}"
        if args.format == "records":
            print(f"finding={finding.line}:{finding.column}:{rule}:{finding.message}")
        else:
            print(line)
    return EXIT_LINT if findings else EXIT_OK


# ----------------------------------------------------------------------
# parser assembly


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("human", "records"),
        default="human",
        help="output style: prose or key=value lines",
    )
    common.add_argument(
        "--ascii",
        action="store_true",
        help="restrict output to 7-bit characters (pi, deg, ...)",
    )
    common.add_argument(
        "--digits",
        type=_digits_arg,
        default=17,
        metavar="N",
        help="significant digits for floats (1-17, default 17)",
    )

    parser = argparse.ArgumentParser(
        prog="anglekit",
        description="Exact angle conversions, measures, geometry, and linting.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("convert", parents=[common], help="re-express an angle in another unit")
    p.add_argument("angle")
    p.add_argument("unit")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("measure", parents=[common], help="dimensionless measure of an angle")
    p.add_argument("angle")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("arc", parents=[common], help="arc length measure*radius")
    p.add_argument("angle")
    p.add_argument("radius")
    p.set_defaults(func=_cmd_arc)

    p = sub.add_parser("chord", parents=[common], help="chord length 2r*sin(measure/2)")
    p.add_argument("angle")
    p.add_argument("radius")
    p.set_defaults(func=_cmd_chord)

    p = sub.add_parser("add", parents=[common], help="semigroup sum of two magnitudes")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_add)

    p = sub.add_parser("points", parents=[common], help="angle between rays vertex->p and vertex->q")
    for name in ("px", "py", "vx", "vy", "qx", "qy"):
        p.add_argument(name)
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("trig", parents=[common], help="periodized trig functions")
    p.add_argument("function", choices=_FORWARD_KINDS + _INVERSE_KINDS)
    p.add_argument("argument")
    p.add_argument("--period", default="2pi", help="full circle (exact number, default 2pi)")
    p.set_defaults(func=_cmd_trig)

    p = sub.add_parser("classify", parents=[common], help="name the range an angle falls in")
    p.add_argument("angle")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table", parents=[common], help="builtin unit conversion factors")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("lint", parents=[common], help="lint a file of angle statements ('-' for stdin)")
    p.add_argument("path")
    p.set_defaults(func=_cmd_lint)

    return parser


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _Failure as exc:
        return _fail(exc.code, exc.message)
    except (UnknownUnitError, MissingUnitError) as exc:
        return _fail(EXIT_UNIT, str(exc))
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except PoleError as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    except DomainError as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    except AngleKitError as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    except ZeroDivisionError as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    except Exception as exc:  # pragma: no cover - safety net, no tracebacks
        return _fail(EXIT_INTERNAL, f"internal error: {exc}")


if __name__ == "__main__":
    sys.exit(main())
