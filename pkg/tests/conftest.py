import random
from fractions import Fraction

import pytest

from binomial_ci import BinomialFamily, Monomial, is_complete_intersection, monomials_of_degree
from binomial_ci.catalog import (
    five_var_pentagon,
    five_var_pentagon_alt,
    three_var_chain,
    three_var_double_cycle,
    two_var_loop,
)


@pytest.fixture
def double_cycle():
    return three_var_double_cycle()


@pytest.fixture
def chain():
    return three_var_chain()


@pytest.fixture
def loop2():
    return two_var_loop()


@pytest.fixture
def pentagon():
    return five_var_pentagon()


@pytest.fixture
def pentagon_alt():
    return five_var_pentagon_alt()


def random_nonzero(rng, bound=10):
    v = 0
    while v == 0:
        v = rng.randint(-bound, bound)
    return Fraction(v, rng.randint(1, bound))


def random_family(rng, numeric=True, n_range=(2, 4), max_degree=3):
    """A random valid family; coefficients are nonzero-a rationals when numeric."""
    n = rng.randint(*n_range)
    degrees = [rng.randint(1, max_degree) for _ in range(n)]
    tails = []
    for i in range(n):
        lead = Monomial.variable(n, i + 1, degrees[i]).exponents
        options = [m for m in monomials_of_degree(n, degrees[i]) if m.exponents != lead]
        tails.append(rng.choice(options))
    if not numeric:
        return BinomialFamily.symbolic(degrees, tails)
    a = [random_nonzero(rng) for _ in range(n)]
    b = [Fraction(rng.randint(-10, 10), rng.randint(1, 10)) for _ in range(n)]
    return BinomialFamily.numeric(degrees, tails, a, b)


@pytest.fixture(scope="session")
def ci_corpus():
    """25 random oracle-certified complete intersections with n <= 4, d_i <= 3."""
    rng = random.Random(20240901)
    families = []
    while len(families) < 25:
        fam = random_family(rng)
        if is_complete_intersection(fam):
            families.append(fam)
    return families
