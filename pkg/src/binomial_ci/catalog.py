"""Built-in example families and forms used by the self-test suite."""

from __future__ import annotations

from fractions import Fraction

from .algebra import SparsePoly
from .family import BinomialFamily, parse_family


def three_var_double_cycle() -> BinomialFamily:
    """Three quadrics whose degree-4 graph has two 2-cycles."""
    return parse_family(
        "f1 = a1*x1^2 - b1*x1*x3 ; f2 = a2*x2^2 - b2*x2*x3 ; f3 = a3*x3^2 - b3*x2*x3"
    )


def three_var_chain() -> BinomialFamily:
    """Three quadrics whose degree-3 graph funnels every vertex to x1*x2*x3."""
    return parse_family(
        "f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x3 ; f3 = a3*x3^2 - b3*x1^2"
    )


def two_var_loop() -> BinomialFamily:
    """Two quadrics with the shared tail x1*x2."""
    return parse_family("f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x2")


def five_var_pentagon() -> BinomialFamily:
    """Five quadrics, unit leading coefficients, tails in a pentagon pattern."""
    return parse_family(
        "f1 = x1^2 - b1*x2*x3 ; f2 = x2^2 - b2*x3*x4 ; f3 = x3^2 - b3*x4*x5 ; "
        "f4 = x4^2 - b4*x1*x5 ; f5 = x5^2 - b5*x1*x2"
    )


def five_var_pentagon_alt() -> BinomialFamily:
    """A second pentagon-tail family with a different adjacency."""
    return parse_family(
        "f1 = x1^2 - b1*x2*x5 ; f2 = x2^2 - b2*x1*x3 ; f3 = x3^2 - b3*x2*x4 ; "
        "f4 = x4^2 - b4*x3*x5 ; f5 = x5^2 - b5*x1*x4"
    )


def pentagon_dual_form() -> dict[tuple[int, ...], SparsePoly]:
    """An 11-term dual form of the pentagon family, with symbolic b-symbols.

    Proportional to the constructed dual generator; annihilated by the
    pentagon generators for every choice of b.
    """
    n = 5

    def b(i: int) -> SparsePoly:
        return SparsePoly.symbol_b(n, i)

    def bb(i: int, j: int) -> SparsePoly:
        return b(i) * b(j)

    const = SparsePoly.constant
    return {
        (3, 0, 2, 0, 0): bb(1, 3),
        (1, 1, 3, 0, 0): 2 * b(3),
        (0, 3, 0, 2, 0): bb(2, 4),
        (2, 0, 0, 3, 0): bb(1, 4),
        (0, 1, 1, 3, 0): 2 * b(4),
        (1, 3, 0, 0, 1): 2 * b(2),
        (3, 0, 0, 1, 1): 2 * b(1),
        (1, 1, 1, 1, 1): const(n, 12),
        (0, 0, 3, 0, 2): bb(3, 5),
        (0, 2, 0, 0, 3): bb(2, 5),
        (0, 0, 1, 1, 3): 2 * b(5),
    }


def pentagon_dual_form_at(b_vals) -> dict[tuple[int, ...], Fraction]:
    """The 11-term dual form evaluated at numeric b-values."""
    ones = [Fraction(1)] * 5
    values = [Fraction(v) for v in b_vals]
    out = {}
    for key, poly in pentagon_dual_form().items():
        value = poly.evaluate(ones, values)
        if value:
            out[key] = value
    return out


def wlp_failure_form() -> dict[tuple[int, ...], Fraction]:
    """X1*X3^3*X4 + X2*X3*X4^3 + X2^2*X5^3: Gorenstein, fails the WLP."""
    one = Fraction(1)
    return {
        (1, 0, 3, 1, 0): one,
        (0, 1, 1, 3, 0): one,
        (0, 2, 0, 0, 3): one,
    }
