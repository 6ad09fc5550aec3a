import random
from fractions import Fraction

import pytest

from binomial_ci import (
    CoeffAssignment,
    DIFFERENTIATION,
    Monomial,
    dual_generator,
    hessian,
    lefschetz_rank,
    monomial_basis,
    parse_family,
    slp_check,
    specialize,
)
from binomial_ci.catalog import pentagon_dual_form_at, wlp_failure_form
from binomial_ci.lefschetz import graded_dimension, has_slp


def squarefree_product_form():
    # F = X1*X2*X3: the square of any variable annihilates it
    return {Monomial((1, 1, 1)): Fraction(1)}


class TestHessian:
    def test_squarefree_form_has_zero_diagonal(self):
        F = squarefree_product_form()
        basis = [Monomial((1, 0, 0)), Monomial((0, 1, 0)), Monomial((0, 0, 1))]
        matrix = hessian(F, 1, basis)
        for i in range(3):
            assert matrix.entries[i][i] == {}
            for j in range(3):
                if i != j:
                    assert len(matrix.entries[i][j]) == 1
        assert matrix.rank_at([Fraction(1), Fraction(2), Fraction(3)]) == 3

    def test_entries_symmetric_and_diagonal_is_square_action(self):
        rng = random.Random(51)
        F = pentagon_dual_form_at([Fraction(rng.randint(2, 9)) for _ in range(5)])
        basis = monomial_basis(F, 2)
        matrix = hessian(F, 2, basis)
        for i in range(len(basis)):
            for j in range(len(basis)):
                assert matrix.entries[i][j] == matrix.entries[j][i]

    def test_dependent_basis_rejected(self):
        F = squarefree_product_form()
        with pytest.raises(ValueError, match="dependent"):
            hessian(F, 1, [Monomial((1, 0, 0)), Monomial((1, 0, 0))])

    def test_hessian_order_limited_by_socle_degree(self):
        with pytest.raises(ValueError, match="socle"):
            hessian(squarefree_product_form(), 2, [Monomial((2, 0, 0))])

    def test_wrong_degree_basis_rejected(self):
        F = squarefree_product_form()
        with pytest.raises(ValueError, match="degree"):
            hessian(F, 1, [Monomial((2, 0, 0))])

    def test_rank_never_exceeds_dimensions(self):
        rng = random.Random(52)
        F = pentagon_dual_form_at([Fraction(rng.randint(2, 9)) for _ in range(5)])
        for k in (1, 2):
            basis = monomial_basis(F, k)
            matrix = hessian(F, k, basis)
            ell = [Fraction(rng.randint(-100, 100)) for _ in range(5)]
            assert matrix.rank_at(ell) <= min(len(basis), graded_dimension(F, 5 - k))


class TestLefschetzRank:
    def test_rank_one_at_order_zero(self):
        F = {Monomial((4, 0)): Fraction(1)}
        assert lefschetz_rank(F, 0, [Fraction(1), Fraction(1)]) == 1

    def test_pentagon_full_ranks(self):
        rng = random.Random(53)
        for _ in range(3):
            b = [Fraction(rng.randint(2, 9), rng.randint(1, 3)) for _ in range(5)]
            F = pentagon_dual_form_at(b)
            ell = [Fraction(rng.randint(-100, 100)) for _ in range(5)]
            assert lefschetz_rank(F, 1, ell) == 5
            assert lefschetz_rank(F, 2, ell) == 10

    def test_wlp_failure_is_rank_deficient_for_every_ell(self):
        F = wlp_failure_form()
        rng = random.Random(54)
        assert graded_dimension(F, 2) == 10
        for _ in range(5):
            ell = [Fraction(rng.randint(-100, 100)) for _ in range(5)]
            assert lefschetz_rank(F, 2, ell) < 10


class TestSlpCheck:
    def test_pentagon_has_slp(self):
        rng = random.Random(55)
        b = [Fraction(rng.randint(2, 9)) for _ in range(5)]
        verdicts = slp_check(pentagon_dual_form_at(b), trials=4, rng=random.Random(1))
        assert [v.k for v in verdicts] == [0, 1, 2]
        assert all(v.status == "holds" for v in verdicts)
        assert has_slp(pentagon_dual_form_at(b), trials=4, rng=random.Random(1))

    def test_wlp_failure_detected_at_k2(self):
        verdicts = slp_check(wlp_failure_form(), trials=4, rng=random.Random(2))
        by_k = {v.k: v for v in verdicts}
        assert by_k[2].status == "probably fails"
        assert by_k[2].rank < 10

    def test_monomial_ci_dual_has_slp(self):
        # b = 0 collapses the dual to a single monomial; check a 3-variable case
        fam = parse_family(
            "f1 = a1*x1^3 - 0*x1^2*x2 ; f2 = a2*x2^2 - 0*x1*x2 ; f3 = a3*x3^2 - 0*x2*x3"
        )
        numeric = specialize(
            fam, CoeffAssignment.of(3, a1=1, a2=1, a3=1, b1=0, b2=0, b3=0)
        )
        F = dual_generator(numeric, DIFFERENTIATION).evaluate()
        assert list(F) == [(2, 1, 1)]
        assert has_slp(F, trials=4, rng=random.Random(3))

    def test_monomial_ci_dual_has_slp_four_variables(self):
        F = {Monomial((2, 1, 1, 1)): Fraction(1)}
        assert has_slp(F, trials=4, rng=random.Random(5))

    def test_verdict_json(self):
        verdicts = slp_check(squarefree_product_form(), trials=2, rng=random.Random(4))
        data = verdicts[1].to_json()
        assert data["k"] == 1
        assert data["basis_size"] == 3
        assert data["verdict"] == "holds"
        assert len(data["ell"]) == 3
