import random
from fractions import Fraction

from binomial_ci import (
    CoeffAssignment,
    Monomial,
    SparsePoly,
    build_c_matrix,
    build_graph,
    det_numeric_oracle,
    det_structural,
    graph_cycle_polynomial,
    is_complete_intersection,
    parse_family,
    poly_divides,
    radical_of_cycle_product,
    resultant_radical,
    specialize,
)
from binomial_ci.resultant import BOUNDED, CERTAIN, PROBABILISTIC

from conftest import random_family, random_nonzero


def sym(n, name):
    block, i = name[0], int(name[1:])
    return SparsePoly.symbol_a(n, i) if block == "a" else SparsePoly.symbol_b(n, i)


def sym_binomial(n, i, j):
    return sym(n, f"a{i}") * sym(n, f"a{j}") - sym(n, f"b{i}") * sym(n, f"b{j}")


class TestCMatrix:
    def test_double_cycle_matrix_shape(self, double_cycle):
        matrix = build_c_matrix(double_cycle)
        assert matrix.size == 15
        assert matrix.degree == 4
        # S_1 holds the monomials divisible by x1^2: 6 of degree 4
        assert matrix.partition.count(1) == 6
        assert matrix.partition.count(2) == 5
        assert matrix.partition.count(3) == 4

    def test_two_variable_partition(self, loop2):
        matrix = build_c_matrix(loop2)
        assert matrix.size == 4
        assert [str(m) for m in matrix.monomials] == ["x1^3", "x1^2*x2", "x1*x2^2", "x2^3"]
        assert matrix.partition == (1, 1, 2, 2)

    def test_almost_binomial_shape(self):
        rng = random.Random(41)
        for _ in range(10):
            fam = random_family(rng, numeric=False)
            matrix = build_c_matrix(fam)
            a_per_column = [0] * matrix.size
            for r in range(matrix.size):
                i = matrix.partition[r]
                # each row: one a_i on the diagonal, one -b_i elsewhere
                assert matrix.succ_cols[r] != r
                a_per_column[r] += 1
                # row label matches the block of the row monomial
                assert fam.step(matrix.monomials[r])[0] == i
            assert all(c == 1 for c in a_per_column)

    def test_text_and_json_dumps(self, loop2):
        matrix = build_c_matrix(loop2)
        text = matrix.to_text()
        lines = text.splitlines()
        assert lines[0].split() == ["x1^3", "x1^2*x2", "x1*x2^2", "x2^3"]
        assert lines[1].split() == ["a1", "-b1", "0", "0"]
        data = matrix.to_json()
        assert data["rows"][0] == {"monomial": "x1^3", "i": 1, "successor": "x1^2*x2"}


class TestDetStructural:
    def test_double_cycle_value(self, double_cycle):
        expected = SparsePoly.monomial(3, (6, 3, 2), (0, 0, 0)) * sym_binomial(3, 2, 3) ** 2
        assert det_structural(double_cycle) == expected

    def test_two_variable_value(self, loop2):
        expected = sym(2, "a1") * sym(2, "a2") * sym_binomial(2, 1, 2)
        assert det_structural(loop2) == expected

    def test_b_zero_gives_pure_a_monomial_of_matrix_size(self):
        rng = random.Random(42)
        for _ in range(6):
            fam = random_family(rng, numeric=False)
            zeroed = specialize(
                fam, CoeffAssignment((None,) * fam.n, (Fraction(0),) * fam.n)
            )
            det_sym = det_structural(fam)
            b_zero = det_sym.substitute([None] * fam.n, [Fraction(0)] * fam.n)
            assert b_zero == det_structural(zeroed).substitute(
                zeroed.a_values, zeroed.b_values
            )
            assert len(b_zero.terms) == 1
            key, coeff = next(iter(b_zero.terms.items()))
            assert coeff == 1
            assert sum(key) == build_c_matrix(fam).size
            assert all(e == 0 for e in key[fam.n :])

    def test_matches_numeric_oracle_at_random_points(self):
        rng = random.Random(43)
        for _ in range(6):
            fam = random_family(rng, numeric=False)
            det = det_structural(fam)
            for _ in range(4):
                a = [random_nonzero(rng) for _ in range(fam.n)]
                b = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(fam.n)]
                numeric = specialize(fam, CoeffAssignment(tuple(a), tuple(b)))
                assert det_numeric_oracle(numeric) == det.evaluate(a, b)

    def test_a_divides_det_iff_off_cycle_edge(self):
        rng = random.Random(44)
        for _ in range(8):
            fam = random_family(rng, numeric=False)
            det = det_structural(fam)
            graph = build_graph(fam, fam.resultant_degree)
            off_cycle = {
                lab
                for lab, cls in zip(graph.labels, graph.vertex_class)
                if cls != "cyclic"
            }
            for i in range(1, fam.n + 1):
                divides = poly_divides(sym(fam.n, f"a{i}"), det)
                assert divides == (i in off_cycle)
                # cross-check by substituting a_i := 0 into the determinant
                a_vals: list = [None] * fam.n
                a_vals[i - 1] = Fraction(0)
                at_zero = det.substitute(a_vals, [None] * fam.n)
                assert at_zero.is_zero() == divides


class TestRadicalOfCycleProduct:
    def test_double_cycle_dedup(self, double_cycle):
        factors = radical_of_cycle_product(build_graph(double_cycle, 4))
        assert factors == [sym_binomial(3, 2, 3)]

    def test_gcd_splitting_into_cyclotomics(self):
        # searches over small families never produced gcd(r) > 1, so drive the
        # divisor splitting with synthetic cycles: r = (1,1) and r = (2,2)
        from types import SimpleNamespace

        from binomial_ci.graph import Cycle

        m = Monomial((1, 1))
        cycles = (
            Cycle((m, m), (1, 2), (1, 1)),
            Cycle((m, m, m, m), (1, 2, 1, 2), (2, 2)),
        )
        graph = SimpleNamespace(n=2, cycles=cycles)
        factors = radical_of_cycle_product(graph)
        a12 = sym(2, "a1") * sym(2, "a2")
        b12 = sym(2, "b1") * sym(2, "b2")
        assert factors == [a12 - b12, a12 + b12]

    def test_gcd_three_splits_into_three_cyclotomic_factors(self):
        from types import SimpleNamespace

        from binomial_ci.graph import Cycle

        m = Monomial((1, 1))
        graph = SimpleNamespace(n=2, cycles=(Cycle((m,) * 6, (1, 2) * 3, (3, 3)),))
        factors = radical_of_cycle_product(graph)
        a12 = sym(2, "a1") * sym(2, "a2")
        b12 = sym(2, "b1") * sym(2, "b2")
        # a^3 - b^3 = (a - b)(a^2 + ab + b^2) in the packed symbols
        assert factors == [a12 - b12, a12 * a12 + a12 * b12 + b12 * b12]
        product = factors[0] * factors[1]
        assert product == a12**3 - b12**3

    def test_acyclic_graph_has_no_factors(self, chain):
        assert radical_of_cycle_product(build_graph(chain, 3)) == []

    def test_product_of_factors_divides_cycle_polynomial_power(self):
        rng = random.Random(45)
        for _ in range(8):
            fam = random_family(rng, numeric=False)
            graph = build_graph(fam, fam.resultant_degree)
            p = graph_cycle_polynomial(graph)
            for f in radical_of_cycle_product(graph):
                assert poly_divides(f, p)


class TestResultantRadical:
    def test_double_cycle_all_certain(self, double_cycle):
        result = resultant_radical(double_cycle)
        expected = sym(3, "a1") * sym(3, "a2") * sym(3, "a3") * sym_binomial(3, 2, 3)
        assert result.product == expected
        assert result.all_certain
        assert [e.value for e in result.t] == [1, 1, 1]

    def test_pentagon_radical_at_unit_a(self, pentagon):
        result = resultant_radical(pentagon)
        b_product = SparsePoly.one(5)
        for i in range(1, 6):
            b_product = b_product * sym(5, f"b{i}")
        assert result.product == SparsePoly.one(5) - b_product
        assert result.all_certain

    def test_b_zero_radical_is_product_of_a_symbols(self, double_cycle):
        zeroed = specialize(
            double_cycle, CoeffAssignment((None,) * 3, (Fraction(0),) * 3)
        )
        result = resultant_radical(zeroed)
        assert result.product == sym(3, "a1") * sym(3, "a2") * sym(3, "a3")

    def test_pure_power_tail_without_probe_is_bounded(self, chain):
        # the third tail x1^2 is a pure power of x1 and some 1-edge is off-cycle
        result = resultant_radical(chain, probe=False)
        statuses = {e.index: e.status for e in result.t}
        assert statuses[2] == CERTAIN and statuses[3] == CERTAIN
        assert statuses[1] in (CERTAIN, BOUNDED)

    def test_probe_settles_the_chain_family(self, chain):
        result = resultant_radical(chain, probe=True, rng=random.Random(9))
        t1 = result.t[0]
        # every 1-labeled edge at the resultant degree lies on a cycle or the
        # probe certifies a CI with a1 = 0; either way the answer is grounded
        assert t1.status in (CERTAIN, PROBABILISTIC)
        if t1.status == CERTAIN and t1.value == 0:
            factored = result.product
            assert not poly_divides(sym(3, "a1"), factored)

    def test_numeric_family_evaluates_to_scalar(self, double_cycle):
        good = specialize(
            double_cycle, CoeffAssignment.of(3, a1=1, a2=1, a3=1, b1=1, b2=1, b3=2)
        )
        bad = specialize(
            double_cycle, CoeffAssignment.of(3, a1=1, a2=1, a3=1, b1=1, b2=1, b3=1)
        )
        assert resultant_radical(good).product.constant_value() != 0
        assert resultant_radical(bad).product.is_zero()

    def test_zero_set_agreement_random_points(self, double_cycle):
        rng = random.Random(46)
        agree = 0
        while agree < 15:
            a = [random_nonzero(rng) for _ in range(3)]
            b = [random_nonzero(rng) for _ in range(3)]
            numeric = specialize(double_cycle, CoeffAssignment(tuple(a), tuple(b)))
            value = resultant_radical(numeric).product
            assert value.is_constant()
            assert (value.constant_value() != 0) == is_complete_intersection(numeric)
            agree += 1

    def test_json_dump(self, double_cycle):
        data = resultant_radical(double_cycle).to_json()
        assert data["factors"] == ["a2*a3 - b2*b3"]
        assert all(entry["status"] == "certain" for entry in data["t"])
