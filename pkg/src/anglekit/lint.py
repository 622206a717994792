"""Notation linter for the little angle expression language.

Statements, one per line:

    angle <name> [= expression]
    length <name> [= expression]
    expression

Three closed rules:

    RAD-IN-TRIG-ARG          a trig function is applied to a quantity
                             carrying a unit symbol instead of a measure
    MISSING-REFERENCE-SYMBOL an angle-typed name is assigned bare numbers
    MAGNITUDE-AS-QUOTIENT    an angle-typed name is assigned a quotient
                             of two length-typed names

Lines that fail to parse produce a finding with rule None instead of an
exception; the linter never raises on input text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .textio import (
    BinaryOperation,
    ExpressionNode,
    FunctionApplication,
    Identifier,
    NumberLiteral,
    QuantityLiteral,
    parse_expression,
    walk,
)

__all__ = [
    "RULE_RAD_IN_TRIG_ARG",
    "RULE_MISSING_REFERENCE_SYMBOL",
    "RULE_MAGNITUDE_AS_QUOTIENT",
    "ALL_RULES",
    "TRIG_FUNCTIONS",
    "LintFinding",
    "lint_text",
]

RULE_RAD_IN_TRIG_ARG = "RAD-IN-TRIG-ARG"
RULE_MISSING_REFERENCE_SYMBOL = "MISSING-REFERENCE-SYMBOL"
RULE_MAGNITUDE_AS_QUOTIENT = "MAGNITUDE-AS-QUOTIENT"

ALL_RULES = (
    RULE_RAD_IN_TRIG_ARG,
    RULE_MISSING_REFERENCE_SYMBOL,
    RULE_MAGNITUDE_AS_QUOTIENT,
)

TRIG_FUNCTIONS = frozenset({"sin", "cos", "tan", "arcsin", "arccos"})

_STATEMENT_RE = re.compile(
    r"^\s*(?P<kw>angle|length)\s+(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"\s*(?:=\s*(?P<expr>.*))?$"
)


@dataclass(frozen=True)
class LintFinding:
    """One diagnostic: rule id (None for syntax), 1-based line/column."""

    rule: str | None
    line: int
    column: int
    message: str
    excerpt: str


def lint_text(text: str) -> list[LintFinding]:
    """Lint a whole program; findings come back ordered by position."""
    declared: dict[str, str] = {}
    findings: list[LintFinding] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        findings.extend(_lint_line(line, line_number, declared))
    return findings


def _lint_line(line: str, line_number: int, declared: dict[str, str]) -> list[LintFinding]:
    excerpt = line.strip()
    target: str | None = None
    right: ExpressionNode | None = None
    full: ExpressionNode | None = None
    try:
        m = _STATEMENT_RE.match(line)
        if m is not None:
            declared[m.group("name")] = m.group("kw")
            expr_text = m.group("expr")
            if expr_text is not None:
                offset = m.start("expr")
                if not expr_text.strip():
                    raise ParseError("missing right-hand side", offset)
                right = parse_expression(expr_text, offset)
                full = right
                target = m.group("name")
        else:
            full = parse_expression(line)
            if (
                isinstance(full, BinaryOperation)
                and full.operator == "="
                and isinstance(full.left, Identifier)
            ):
                target = full.left.name
                right = full.right
    except ParseError as exc:
        return [
            LintFinding(None, line_number, exc.position + 1, exc.message, excerpt)
        ]
    found: list[LintFinding] = []
    if full is not None:
        found.extend(_check_trig_arguments(full, line_number, excerpt))
    if target is not None and declared.get(target) == "angle" and right is not None:
        found.extend(_check_bare_number(right, line_number, excerpt))
        found.extend(_check_length_quotient(right, line_number, excerpt, declared))
    found.sort(key=lambda finding: finding.column)
    return found


def _check_trig_arguments(
    node: ExpressionNode, line_number: int, excerpt: str
) -> list[LintFinding]:
    found = []
    for sub in walk(node):
        if isinstance(sub, FunctionApplication) and sub.name in TRIG_FUNCTIONS:
            for inner in walk(sub.argument):
                if isinstance(inner, QuantityLiteral):
                    found.append(
                        LintFinding(
                            RULE_RAD_IN_TRIG_ARG,
                            line_number,
                            inner.position + 1,
                            f"argument of {sub.name}() carries the unit "
                            f"'{inner.unit_text}'; pass the dimensionless measure",
                            excerpt,
                        )
                    )
    return found


def _check_bare_number(
    right: ExpressionNode, line_number: int, excerpt: str
) -> list[LintFinding]:
    for sub in walk(right):
        if isinstance(sub, NumberLiteral):
            continue
        if isinstance(sub, BinaryOperation) and sub.operator in ("+", "*", "/"):
            continue
        return []
    return [
        LintFinding(
            RULE_MISSING_REFERENCE_SYMBOL,
            line_number,
            right.position + 1,
            "angle assignment from bare numbers; attach a reference symbol "
            "such as rad or °",
            excerpt,
        )
    ]


def _check_length_quotient(
    right: ExpressionNode,
    line_number: int,
    excerpt: str,
    declared: dict[str, str],
) -> list[LintFinding]:
    if not (isinstance(right, BinaryOperation) and right.operator == "/"):
        return []
    left, divisor = right.left, right.right
    if not (isinstance(left, Identifier) and isinstance(divisor, Identifier)):
        return []
    if declared.get(left.name) != "length" or declared.get(divisor.name) != "length":
        return []
    return [
        LintFinding(
            RULE_MAGNITUDE_AS_QUOTIENT,
            line_number,
            right.position + 1,
            f"'{left.name}/{divisor.name}' is a ratio of lengths, which is a "
            "dimensionless measure, not an angle value",
            excerpt,
        )
    ]
