"""Linter rules, declaration tracking, positions, and totality."""

from hypothesis import given
from hypothesis import strategies as st

from anglekit.lint import (
    RULE_MAGNITUDE_AS_QUOTIENT,
    RULE_MISSING_REFERENCE_SYMBOL,
    RULE_RAD_IN_TRIG_ARG,
    LintFinding,
    lint_text,
)


def rules_of(text):
    return [(f.rule, f.line) for f in lint_text(text)]


class TestTrigArgumentRule:
    def test_sin_of_radian_quantity(self):
        findings = lint_text("x = sin(0.5 rad)")
        assert len(findings) == 1
        f = findings[0]
        assert f.rule == RULE_RAD_IN_TRIG_ARG
        assert (f.line, f.column) == (1, 9)
        assert "rad" in f.message
        assert f.excerpt == "x = sin(0.5 rad)"

    def test_degree_symbol_quantity(self):
        assert rules_of("y = cos(90°)") == [(RULE_RAD_IN_TRIG_ARG, 1)]

    def test_quantity_nested_deeper_in_the_argument(self):
        assert rules_of("v = sin(2 * 0.5 rad)") == [(RULE_RAD_IN_TRIG_ARG, 1)]

    def test_inverse_trig_counts(self):
        assert rules_of("w = arcsin(1 rad)") == [(RULE_RAD_IN_TRIG_ARG, 1)]

    def test_plain_number_argument_is_fine(self):
        assert rules_of("x = sin(0.5)") == []

    def test_pi_argument_is_fine(self):
        assert rules_of("y = cos(pi)") == []

    def test_exp_is_not_a_trig_function(self):
        assert rules_of("x = exp(1 rad)") == []

    def test_bare_trig_call_without_assignment(self):
        assert rules_of("sin(1 turn)") == [(RULE_RAD_IN_TRIG_ARG, 1)]


class TestMissingReferenceRule:
    def test_bare_pi(self):
        findings = lint_text("angle a = pi")
        assert [(f.rule, f.line) for f in findings] == [
            (RULE_MISSING_REFERENCE_SYMBOL, 1)
        ]

    def test_bare_decimal(self):
        assert rules_of("angle b = 3.14") == [(RULE_MISSING_REFERENCE_SYMBOL, 1)]

    def test_arithmetic_of_bare_numbers(self):
        assert rules_of("angle c = 2 * pi") == [(RULE_MISSING_REFERENCE_SYMBOL, 1)]
        assert rules_of("angle d = pi / 2") == [(RULE_MISSING_REFERENCE_SYMBOL, 1)]

    def test_quantity_satisfies_the_rule(self):
        assert rules_of("angle a = pi rad") == []
        assert rules_of("angle b = 90°") == []

    def test_identifier_rhs_is_fine(self):
        assert rules_of("angle a = b") == []

    def test_length_assignment_is_not_checked(self):
        assert rules_of("length r = 2.5") == []

    def test_late_assignment_to_declared_angle(self):
        assert rules_of("angle a\na = 1.5") == [(RULE_MISSING_REFERENCE_SYMBOL, 2)]

    def test_assignment_to_undeclared_name_is_fine(self):
        assert rules_of("a = 1.5") == []


class TestLengthQuotientRule:
    def test_classic_quotient(self):
        text = "length s\nlength r\nangle a = s / r"
        findings = lint_text(text)
        assert [(f.rule, f.line) for f in findings] == [(RULE_MAGNITUDE_AS_QUOTIENT, 3)]
        assert "s/r" in findings[0].message

    def test_parenthesized_quotient(self):
        text = "length c\nlength d\nangle q = (c / d)"
        assert rules_of(text) == [(RULE_MAGNITUDE_AS_QUOTIENT, 3)]

    def test_late_assignment(self):
        text = "length s\nlength r\nangle a\na = s / r"
        assert rules_of(text) == [(RULE_MAGNITUDE_AS_QUOTIENT, 4)]

    def test_undeclared_divisor_is_fine(self):
        assert rules_of("length s\nangle a = s / r") == []

    def test_angle_quotient_is_fine(self):
        assert rules_of("angle a\nangle b\nangle c = a / b") == []

    def test_quotient_assigned_to_length_is_fine(self):
        assert rules_of("length s\nlength r\nx = s / r") == []

    def test_correct_arc_equation_is_fine(self):
        assert rules_of("length s\nlength r\ns = phi * r") == []


class TestStatementsAndSyntax:
    def test_declaration_without_assignment(self):
        assert rules_of("angle a") == []
        assert rules_of("length width") == []

    def test_blank_lines_are_skipped(self):
        assert rules_of("\n\nangle a = pi\n\n") == [(RULE_MISSING_REFERENCE_SYMBOL, 3)]

    def test_syntax_finding_has_no_rule(self):
        findings = lint_text("angle a = )")
        assert len(findings) == 1
        assert findings[0].rule is None
        assert findings[0].line == 1
        assert findings[0].column == 11

    def test_missing_rhs(self):
        findings = lint_text("angle a = ")
        assert len(findings) == 1
        assert findings[0].rule is None

    def test_line_numbers_accumulate(self):
        text = "angle a = pi\nx = sin(1 rad)\n???\n"
        findings = lint_text(text)
        assert [(f.rule, f.line) for f in findings] == [
            (RULE_MISSING_REFERENCE_SYMBOL, 1),
            (RULE_RAD_IN_TRIG_ARG, 2),
            (None, 3),
        ]

    def test_columns_are_one_based(self):
        findings = lint_text("x = sin(0.5 rad)")
        assert findings[0].column == 9

    def test_findings_are_value_objects(self):
        f = LintFinding(None, 1, 1, "m", "e")
        assert f == LintFinding(None, 1, 1, "m", "e")


@given(st.text(max_size=200))
def test_linter_never_raises(text):
    for finding in lint_text(text):
        assert finding.line >= 1
        assert finding.column >= 1


@given(
    st.lists(
        st.sampled_from(
            [
                "angle a = pi",
                "angle b = 90°",
                "length s",
                "length r",
                "angle c = s / r",
                "x = sin(0.5 rad)",
                "y = cos(0.5)",
                "junk ( junk",
                "",
            ]
        ),
        max_size=12,
    )
)
def test_findings_always_point_into_the_text(lines):
    text = "\n".join(lines)
    for finding in lint_text(text):
        assert 1 <= finding.line <= len(lines)
        line = lines[finding.line - 1]
        assert 1 <= finding.column <= len(line) + 1
