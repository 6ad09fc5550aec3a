import math
import random
from fractions import Fraction

from binomial_ci import (
    CoeffAssignment,
    Monomial,
    SparsePoly,
    build_graph,
    cycle_polynomial,
    graph_cycle_polynomial,
    parse_monomial,
    specialize,
    to_dot,
)
from binomial_ci.graph import CYCLIC, SINK, TRANSIENT, graph_to_json

from conftest import random_family


def sym_binomial(n, i, j):
    return SparsePoly.symbol_a(n, i) * SparsePoly.symbol_a(n, j) - SparsePoly.symbol_b(
        n, i
    ) * SparsePoly.symbol_b(n, j)


class TestDoubleCycleFamily:
    def test_shape(self, double_cycle):
        g = build_graph(double_cycle, 4)
        assert len(g.vertices) == 15
        assert g.edge_count() == 15
        assert g.sinks() == []
        assert len(g.cycles) == 2
        assert all(c.label_counts == (0, 1, 1) for c in g.cycles)
        assert all(len(c) == 2 for c in g.cycles)

    def test_known_edges(self, double_cycle):
        g = build_graph(double_cycle, 4)
        assert g.successor(parse_monomial("x1^4", 3)) == parse_monomial("x1^3*x3", 3)
        assert g.label(parse_monomial("x1^4", 3)) == 1
        assert g.successor(parse_monomial("x1*x2*x3^2", 3)) == parse_monomial("x1*x2^2*x3", 3)
        assert g.label(parse_monomial("x1*x2*x3^2", 3)) == 3
        assert g.successor(parse_monomial("x3^4", 3)) == parse_monomial("x2*x3^3", 3)

    def test_cycle_polynomial_of_graph(self, double_cycle):
        g = build_graph(double_cycle, 4)
        assert graph_cycle_polynomial(g) == sym_binomial(3, 2, 3) ** 2

    def test_degree_three_graph_has_one_sink_and_one_cycle(self, double_cycle):
        g = build_graph(double_cycle, 3)
        assert g.sinks() == [parse_monomial("x1*x2*x3", 3)]
        assert len(g.cycles) == 1
        assert g.cycles[0].label_counts == (0, 1, 1)


class TestChainFamily:
    def test_all_paths_reach_the_sink(self, chain):
        g = build_graph(chain, 3)
        assert len(g.vertices) == 10
        assert g.edge_count() == 9
        assert g.cycles == ()
        assert g.sinks() == [parse_monomial("x1*x2*x3", 3)]
        assert graph_cycle_polynomial(g) == SparsePoly.one(3)

    def test_vertex_classes(self, chain):
        g = build_graph(chain, 3)
        for m in g.vertices:
            expected = SINK if m == parse_monomial("x1*x2*x3", 3) else TRANSIENT
            assert g.class_of(m) == expected


class TestTwoVariableLoop:
    def test_hand_iterated_cycle(self, loop2):
        g = build_graph(loop2, 3)
        assert len(g.vertices) == 4
        assert len(g.cycles) == 1
        cycle = g.cycles[0]
        assert set(cycle.vertices) == {Monomial((2, 1)), Monomial((1, 2))}
        assert cycle.label_counts == (1, 1)
        assert cycle_polynomial(cycle) == sym_binomial(2, 1, 2)
        # rotation starts at the lex-smallest member
        assert cycle.vertices[0] == Monomial((1, 2))


class TestInvariants:
    def test_vertex_count_is_binomial(self):
        rng = random.Random(1)
        for _ in range(10):
            fam = random_family(rng, numeric=False)
            d = rng.randint(1, 5)
            g = build_graph(fam, d)
            assert len(g.vertices) == math.comb(d + fam.n - 1, fam.n - 1)

    def test_sinks_are_exactly_the_basis_monomials(self):
        rng = random.Random(2)
        for _ in range(10):
            fam = random_family(rng, numeric=False)
            d = rng.randint(1, 5)
            g = build_graph(fam, d)
            expected = {m for m in g.vertices if fam.in_basis(m)}
            assert set(g.sinks()) == expected

    def test_no_sinks_at_the_resultant_degree(self):
        rng = random.Random(3)
        for _ in range(10):
            fam = random_family(rng, numeric=False)
            g = build_graph(fam, fam.resultant_degree)
            assert not g.sinks()

    def test_structure_is_coefficient_independent(self, double_cycle):
        rng = random.Random(4)
        numeric = specialize(
            double_cycle,
            CoeffAssignment(
                tuple(Fraction(rng.randint(1, 9)) for _ in range(3)),
                tuple(Fraction(rng.randint(-9, 9)) for _ in range(3)),
            ),
        )
        g1 = build_graph(double_cycle, 4)
        g2 = build_graph(numeric, 4)
        assert g1.succ == g2.succ
        assert g1.labels == g2.labels
        assert [c.label_counts for c in g1.cycles] == [c.label_counts for c in g2.cycles]

    def test_cycle_polynomials_have_unit_coefficients_on_disjoint_blocks(self):
        rng = random.Random(5)
        for _ in range(10):
            fam = random_family(rng, numeric=False)
            g = build_graph(fam, fam.resultant_degree)
            product = SparsePoly.one(fam.n)
            for c in g.cycles:
                p = cycle_polynomial(c)
                assert len(p.terms) == 2
                assert sorted(p.terms.values()) == [Fraction(-1), Fraction(1)]
                keys = sorted(p.terms)
                # one key purely in the a-block, the other purely in the b-block
                assert all(e == 0 for e in keys[0][: fam.n])
                assert all(e == 0 for e in keys[1][fam.n :])
                product = product * p
            assert product == graph_cycle_polynomial(g)

    def test_every_cyclic_vertex_in_exactly_one_cycle(self):
        rng = random.Random(6)
        for _ in range(10):
            fam = random_family(rng, numeric=False)
            g = build_graph(fam, rng.randint(1, 5))
            counted = [m for c in g.cycles for m in c.vertices]
            assert len(counted) == len(set(counted))
            assert set(counted) == {
                m for m, cls in zip(g.vertices, g.vertex_class) if cls == CYCLIC
            }

    def test_cycles_follow_the_successor_map(self):
        rng = random.Random(7)
        for _ in range(10):
            fam = random_family(rng, numeric=False)
            g = build_graph(fam, rng.randint(1, 5))
            for c in g.cycles:
                for j, m in enumerate(c.vertices):
                    assert g.successor(m) == c.vertices[(j + 1) % len(c)]
                    assert g.label(m) == c.labels[j]
                assert sum(c.label_counts) == len(c)


class TestExports:
    def test_dot_output(self, chain):
        g = build_graph(chain, 3)
        dot = to_dot(g)
        assert dot.startswith("digraph")
        assert dot.count("->") == 9
        assert '"x1^2*x2" -> "x1*x2^2" [label="1"];' in dot
        assert "peripheries" not in dot  # acyclic

    def test_dot_marks_cyclic_vertices(self, double_cycle):
        g = build_graph(double_cycle, 4)
        dot = to_dot(g)
        assert dot.count("peripheries=2") == 4
        assert dot.count("->") == 15

    def test_dot_deterministic(self, double_cycle):
        assert to_dot(build_graph(double_cycle, 4)) == to_dot(build_graph(double_cycle, 4))

    def test_json_dump(self, double_cycle):
        g = build_graph(double_cycle, 4)
        data = graph_to_json(g)
        assert data["d"] == 4
        assert len(data["vertices"]) == 15
        assert len(data["edges"]) == 15
        assert data["cycles"] == [
            {"vertices": ["x1*x2*x3^2", "x1*x2^2*x3"], "r": [0, 1, 1]},
            {"vertices": ["x2*x3^3", "x2^2*x3^2"], "r": [0, 1, 1]},
        ]
