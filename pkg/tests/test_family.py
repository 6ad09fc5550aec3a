import json
import random
from fractions import Fraction

import pytest

from binomial_ci import (
    CoeffAssignment,
    FamilyParseError,
    FamilyValidationError,
    Monomial,
    family_from_json,
    family_to_json,
    format_family,
    load_family,
    parse_family,
    parse_monomial,
    specialize,
)
from binomial_ci.family import parse_x_polynomial

from conftest import random_family


class TestParsing:
    def test_symbolic_family(self):
        fam = parse_family(
            "f1 = a1*x1^2 - b1*x1*x3 ; f2 = a2*x2^2 - b2*x2*x3 ; f3 = a3*x3^2 - b3*x2*x3"
        )
        assert fam.n == 3
        assert fam.degrees == (2, 2, 2)
        assert fam.tails == (Monomial((1, 0, 1)), Monomial((0, 1, 1)), Monomial((0, 1, 1)))
        assert fam.coeff_mode == "symbolic"

    def test_newline_separators_and_whitespace(self):
        fam = parse_family("f1=a1*x1^2-b1*x1*x2\n  f2 = a2 * x2^2 - b2 * x1 * x2")
        assert fam.n == 2
        assert fam.tails == (Monomial((1, 1)), Monomial((1, 1)))

    def test_generators_in_any_order(self):
        fam = parse_family("f2 = a2*x2^2 - b2*x1*x2 ; f1 = a1*x1^3 - b1*x1^2*x2")
        assert fam.degrees == (3, 2)

    def test_unit_leading_coefficient_folds_to_numeric_one(self):
        fam = parse_family("f1 = x1^2 - b1*x2^2 ; f2 = x2^2 - b2*x1*x2")
        assert fam.a_values == (Fraction(1), Fraction(1))
        assert fam.b_values == (None, None)
        assert fam.coeff_mode == "mixed"

    def test_rational_coefficients(self):
        fam = parse_family("f1 = 2*x1^2 - 1/2*x1*x2 ; f2 = a2*x2^2 - 0*x1*x2")
        assert fam.a_values == (Fraction(2), None)
        assert fam.b_values == (Fraction(1, 2), Fraction(0))

    def test_monomial_generator_needs_explicit_zero_tail(self):
        with pytest.raises(FamilyParseError):
            parse_family("f1 = a1*x1^3 ; f2 = a2*x2^3 - b2*x1^2*x2")
        fam = parse_family("f1 = a1*x1^3 - 0*x1^2*x2 ; f2 = a2*x2^3 - b2*x1^2*x2")
        assert fam.b_values[0] == 0
        assert fam.tails[0] == Monomial((2, 1))

    def test_tail_equal_to_lead_rejected(self):
        with pytest.raises(FamilyValidationError, match="equals x1"):
            parse_family("f1 = a1*x1^2 - b1*x1^2 ; f2 = a2*x2^2 - b2*x1*x2")

    def test_wrong_tail_degree_rejected(self):
        with pytest.raises(FamilyValidationError, match="degree"):
            parse_family("f1 = a1*x1^2 - b1*x1*x2*x1 ; f2 = a2*x2^2 - b2*x1*x2")

    def test_zero_leading_coefficient_rejected(self):
        with pytest.raises(FamilyValidationError, match="nonzero"):
            parse_family("f1 = 0*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x2")

    def test_duplicate_index_rejected(self):
        with pytest.raises(FamilyParseError, match="duplicate"):
            parse_family("f1 = a1*x1^2 - b1*x1*x2 ; f1 = a1*x1^2 - b1*x1*x2")

    def test_missing_index_rejected(self):
        with pytest.raises(FamilyParseError, match="missing"):
            parse_family("f1 = a1*x1^2 - b1*x1*x2 ; f3 = a3*x2^2 - b3*x1*x2")

    def test_mismatched_symbols_rejected(self):
        with pytest.raises(FamilyParseError, match="a1"):
            parse_family("f1 = a2*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x2")
        with pytest.raises(FamilyParseError, match="b2"):
            parse_family("f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b1*x1*x2")

    def test_lead_must_be_pure_power_of_own_variable(self):
        with pytest.raises(FamilyParseError, match="power of x1"):
            parse_family("f1 = a1*x1*x2 - b1*x2^2 ; f2 = a2*x2^2 - b2*x1*x2")

    def test_error_carries_position(self):
        with pytest.raises(FamilyParseError) as err:
            parse_family("f1 = a1*x1^2 - b1*x1*x2 ;\nf2 = a2*x2^2 % b2*x1*x2")
        assert err.value.line == 2

    def test_one_variable_family_impossible(self):
        with pytest.raises(FamilyValidationError):
            parse_family("f1 = a1*x1^2 - b1*x1^2")


class TestRoundTrip:
    def test_print_parse_round_trip_random(self):
        rng = random.Random(123)
        for _ in range(30):
            fam = random_family(rng, numeric=rng.random() < 0.5)
            assert parse_family(format_family(fam)) == fam

    def test_json_round_trip_random(self):
        rng = random.Random(321)
        for _ in range(30):
            fam = random_family(rng, numeric=rng.random() < 0.5)
            assert family_from_json(family_to_json(fam)) == fam

    def test_json_mixed_mode(self):
        fam = parse_family("f1 = x1^2 - b1*x2^2 ; f2 = a2*x2^2 - 3*x1*x2")
        data = family_to_json(fam)
        assert data["coefficients"]["mode"] == "mixed"
        assert family_from_json(json.dumps(data)) == fam

    def test_load_family_dispatches_on_shape(self):
        fam = parse_family("f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x2")
        assert load_family(format_family(fam)) == fam
        assert load_family(json.dumps(family_to_json(fam))) == fam

    def test_json_rejects_malformed_input(self):
        good = family_to_json(parse_family("f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x2"))
        wrong_tail = json.loads(json.dumps(good))
        wrong_tail["generators"][0]["m"] = [1]  # wrong length
        with pytest.raises(FamilyValidationError):
            family_from_json(wrong_tail)
        bad_mode = json.loads(json.dumps(good))
        bad_mode["coefficients"] = {"mode": "float"}
        with pytest.raises(FamilyValidationError):
            family_from_json(bad_mode)
        missing = json.loads(json.dumps(good))
        del missing["generators"]
        with pytest.raises(FamilyValidationError):
            family_from_json(missing)
        duplicate = json.loads(json.dumps(good))
        duplicate["generators"][1]["i"] = 1
        with pytest.raises(FamilyValidationError):
            family_from_json(duplicate)


class TestSpecialize:
    def test_identity_assignment(self, double_cycle):
        assert specialize(double_cycle, CoeffAssignment.empty(3)) == double_cycle

    def test_unit_a_assignment(self, pentagon):
        again = specialize(pentagon, CoeffAssignment((Fraction(1),) * 5, (None,) * 5))
        assert again == pentagon  # pentagon already has a = 1
        assert again.a_values == (Fraction(1),) * 5

    def test_single_b_zero(self, double_cycle):
        fam = specialize(double_cycle, CoeffAssignment.of(3, b2=0))
        assert fam.b_values == (None, Fraction(0), None)
        assert fam.coeff_mode == "mixed"
        assert "0*x2*x3" in format_family(fam)

    def test_zero_a_rejected(self, double_cycle):
        with pytest.raises(FamilyValidationError):
            specialize(double_cycle, CoeffAssignment.of(3, a2=0))

    def test_generator_polynomials(self, double_cycle):
        numeric = specialize(
            double_cycle, CoeffAssignment.of(3, a1=2, a2=1, a3=1, b1=0, b2=1, b3=1)
        )
        f1 = numeric.generator_values(1)
        assert f1 == {Monomial((2, 0, 0)): Fraction(2)}  # zero tail dropped
        f2 = numeric.generator_values(2)
        assert f2[Monomial((0, 1, 1))] == Fraction(-1)


class TestHelpers:
    def test_parse_monomial(self):
        assert parse_monomial("x1^2*x3", 3) == Monomial((2, 0, 1))
        assert parse_monomial("1", 3) == Monomial((0, 0, 0))
        with pytest.raises(FamilyValidationError):
            parse_monomial("x5", 3)

    def test_parse_x_polynomial(self):
        terms = parse_x_polynomial("2*x1^2*x2 - 1/3*x2^3 + x1*x2^2", 2)
        assert terms == {
            Monomial((2, 1)): Fraction(2),
            Monomial((0, 3)): Fraction(-1, 3),
            Monomial((1, 2)): Fraction(1),
        }
        assert parse_x_polynomial("x1 - x1", 2) == {}

    def test_step_and_basis(self, double_cycle):
        m = Monomial((2, 1, 0))
        label, nxt = double_cycle.step(m)
        assert label == 1 and nxt == Monomial((1, 1, 1))
        assert double_cycle.step(Monomial((1, 1, 1))) is None
        assert double_cycle.in_basis(Monomial((1, 1, 1)))
        assert not double_cycle.in_basis(Monomial((2, 1, 0)))
        assert double_cycle.step(Monomial((0, 2, 2)), cutoff=1) is None

    def test_socle_and_resultant_degrees(self, double_cycle):
        assert double_cycle.socle_degree == 3
        assert double_cycle.resultant_degree == 4
