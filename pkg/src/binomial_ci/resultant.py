"""The structured resultant matrix and the radical of the resultant.

At degree sum(d_i - 1) + 1 every monomial is divisible by some x_i^{d_i}, so
the rows (x^alpha / x_i^{d_i}) * f_i form a square matrix with every a on the
diagonal and a single -b per row sitting on the reduction-graph successor.
Its determinant is the a-product over transient vertices times the cycle
polynomials, and the radical of the resultant follows from the graph's cycles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import Monomial, SparsePoly, cyclotomic, divisors
from .family import BinomialFamily, CoeffAssignment, specialize
from .graph import CYCLIC, ReductionGraph, build_graph
from .linalg import det_rational
from .oracle import ci_reference, hilbert_function_of_generators

CERTAIN = "certain"
PROBABILISTIC = "probabilistic"
BOUNDED = "bounded"


class CMatrix:
    """Square coefficient matrix of the degree-d multiples of the generators.

    Rows and columns are indexed by the degree-d monomials in canonical order;
    the row for x^alpha in block S_i carries a_i on the diagonal and -b_i in
    the column of the successor monomial x^alpha * m_i / x_i^{d_i}.
    """

    def __init__(self, family: BinomialFamily, graph: ReductionGraph):
        self.family = family
        self.graph = graph
        self.degree = graph.d
        self.monomials = graph.vertices
        if any(s is None for s in graph.succ):
            raise AssertionError("the resultant degree admits no sinks")
        self.partition = tuple(graph.labels)  # S_i index per row monomial
        self.succ_cols = tuple(graph.succ)

    @property
    def size(self) -> int:
        return len(self.monomials)

    def numeric_matrix(self, a_vals, b_vals) -> list[list[Fraction]]:
        size = self.size
        rows = []
        for r in range(size):
            i = self.partition[r]
            row = [Fraction(0)] * size
            row[r] = Fraction(a_vals[i - 1])
            row[self.succ_cols[r]] += -Fraction(b_vals[i - 1])
            rows.append(row)
        return rows

    def entry_symbol(self, r: int, c: int) -> str:
        i = self.partition[r]
        out = []
        if c == r:
            out.append(f"a{i}")
        if c == self.succ_cols[r]:
            out.append(f"-b{i}")
        return "".join(out) if out else "0"

    def to_text(self) -> str:
        header = [str(m) for m in self.monomials]
        cells = [
            [self.entry_symbol(r, c) for c in range(self.size)] for r in range(self.size)
        ]
        widths = [
            max(len(header[c]), max(len(cells[r][c]) for r in range(self.size)))
            for c in range(self.size)
        ]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        for row in cells:
            lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "size": self.size,
            "rows": [
                {
                    "monomial": str(m),
                    "i": self.partition[r],
                    "successor": str(self.monomials[self.succ_cols[r]]),
                }
                for r, m in enumerate(self.monomials)
            ],
        }


def build_c_matrix(family: BinomialFamily) -> CMatrix:
    graph = build_graph(family, family.resultant_degree)
    return CMatrix(family, graph)


def det_structural_parts(family: BinomialFamily) -> tuple[SparsePoly, list[tuple[SparsePoly, int]]]:
    """Factored determinant: (a-monomial, [(cycle polynomial, multiplicity)])."""
    graph = build_graph(family, family.resultant_degree)
    n = family.n
    a_exp = [0] * n
    for label, cls in zip(graph.labels, graph.vertex_class):
        if cls != CYCLIC:
            a_exp[label - 1] += 1
    monomial = SparsePoly.monomial(n, tuple(a_exp), (0,) * n)
    grouped: dict[tuple[int, ...], int] = {}
    for cycle in graph.cycles:
        grouped[cycle.label_counts] = grouped.get(cycle.label_counts, 0) + 1
    zero = (0,) * n
    factors = [
        (SparsePoly(n, [(r + zero, 1), (zero + r, -1)]), count)
        for r, count in sorted(grouped.items(), reverse=True)
    ]
    return monomial, factors


def det_structural(family: BinomialFamily) -> SparsePoly:
    """The determinant read off the reduction graph at the resultant degree.

    With the a-symbols on the diagonal the sign works out to +1: the product
    of the transient labels' a-symbols times the cycle polynomials.
    """
    monomial, factors = det_structural_parts(family)
    result = monomial
    for poly, count in factors:
        result = result * poly**count
    return result


def det_numeric_oracle(family: BinomialFamily, assignment: CoeffAssignment | None = None) -> Fraction:
    """Exact determinant of the specialized matrix, by Bareiss elimination."""
    if assignment is not None:
        family = specialize(family, assignment)
    if not family.is_numeric:
        raise ValueError("the numeric determinant needs a fully numeric family")
    matrix = build_c_matrix(family)
    return det_rational(matrix.numeric_matrix(family.a_values, family.b_values))


def _homogenized_cyclotomic(n: int, e: int, s: tuple[int, ...]) -> SparsePoly:
    # Psi_e(A, B) with A = prod a_i^{s_i}, B = prod b_i^{s_i}.
    coeffs = cyclotomic(e)
    degree = len(coeffs) - 1
    zero = (0,) * n
    terms = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        a_part = tuple(j * si for si in s)
        b_part = tuple((degree - j) * si for si in s)
        terms.append((a_part + b_part, c))
    return SparsePoly(n, terms)


def radical_of_cycle_product(graph: ReductionGraph) -> list[SparsePoly]:
    """Distinct candidate irreducible factors of the cycle-polynomial product.

    Each cycle's a^r - b^r splits as the product of homogenized cyclotomic
    polynomials in (a^s, b^s) over the divisors of g = gcd(r), s = r/g.
    Factors are deduplicated by their (s, e) key and then by exact equality.
    """
    n = graph.n
    factors: list[SparsePoly] = []
    seen: set[tuple[tuple[int, ...], int]] = set()
    for cycle in graph.cycles:
        r = cycle.label_counts
        g = 0
        for entry in r:
            g = gcd(g, entry)
        s = tuple(entry // g for entry in r)
        for e in divisors(g):
            if (s, e) in seen:
                continue
            seen.add((s, e))
            factors.append(_homogenized_cyclotomic(n, e, s))
    unique: list[SparsePoly] = []
    for f in factors:
        if all(f != u for u in unique):
            unique.append(f)
    return unique


@dataclass(frozen=True)
class TEntry:
    index: int
    value: int  # 0 or 1
    status: str  # certain | probabilistic | bounded


@dataclass(frozen=True)
class RadicalResult:
    """Radical of the resultant: a-exponents t plus the cycle factors.

    `product` expands prod a_i^{t_i} * prod(factors) with the family's fixed
    values substituted and monomial factors reduced to their squarefree
    symbol support; when some t_i is only `bounded`, the product is an upper
    bound (a multiple of the true radical).
    """

    t: tuple[TEntry, ...]
    factors: tuple[SparsePoly, ...]
    product: SparsePoly

    @property
    def all_certain(self) -> bool:
        return all(entry.status == CERTAIN for entry in self.t)

    def to_json(self) -> dict:
        return {
            "t": [
                {"i": e.index, "value": e.value, "status": e.status} for e in self.t
            ],
            "factors": [str(f) for f in self.factors],
            "product": str(self.product),
        }


def _random_nonzero(rng: random.Random, bound: int = 1000) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def _probe_t_index(family: BinomialFamily, i: int, rng: random.Random, trials: int = 5) -> TEntry:
    # Specialize a_i := 0 (and unfixed symbols to random nonzero rationals);
    # any complete intersection among the trials certifies a_i does not divide
    # the resultant.
    n = family.n
    for _ in range(trials):
        a_vals = [v if v is not None else _random_nonzero(rng) for v in family.a_values]
        b_vals = [v if v is not None else _random_nonzero(rng) for v in family.b_values]
        a_vals[i - 1] = Fraction(0)
        generators = []
        for k in range(1, n + 1):
            gen: dict[Monomial, Fraction] = {}
            if a_vals[k - 1]:
                gen[family.lead_monomial(k)] = a_vals[k - 1]
            if b_vals[k - 1]:
                gen[family.tails[k - 1]] = -b_vals[k - 1]
            generators.append(gen)
        top = family.socle_degree + 1
        hf = hilbert_function_of_generators(n, generators, top)
        if hf.values == ci_reference(family.degrees, top):
            return TEntry(i, 0, CERTAIN)
    return TEntry(i, 1, PROBABILISTIC)


def _radical_product(n: int, contributions: list[SparsePoly]) -> SparsePoly:
    scalar = Fraction(1)
    squarefree = [0] * (2 * n)
    polys: list[SparsePoly] = []
    for c in contributions:
        if c.is_zero():
            return SparsePoly.zero(n)
        if c.is_constant():
            scalar *= c.constant_value()
        elif len(c.terms) == 1:
            key, coeff = next(iter(c.terms.items()))
            scalar *= coeff
            for j, e in enumerate(key):
                if e:
                    squarefree[j] = 1
        else:
            polys.append(c)
    result = SparsePoly(n, [(tuple(squarefree), scalar)])
    for p in polys:
        result = result * p
    return result


def resultant_radical(family: BinomialFamily, probe: bool = False, rng: random.Random | None = None) -> RadicalResult:
    """The radical of the resultant, determined from the reduction graph.

    When no tail is a pure variable power, every t_i is 1 (certain).  An
    index whose i-labeled edges all lie on cycles gets t_i = 0 (certain).
    Remaining indices are probed probabilistically when `probe` is set and
    reported as bounded otherwise.
    """
    n = family.n
    graph = build_graph(family, family.resultant_degree)
    raw_factors = radical_of_cycle_product(graph)
    factors: list[SparsePoly] = []
    for f in raw_factors:
        sub = f.substitute(family.a_values, family.b_values)
        if all(sub != u for u in factors):
            factors.append(sub)

    pure_power_vars: set[int] = set()
    for m in family.tails:
        support = [j for j, e in enumerate(m.exponents) if e]
        if len(support) == 1:
            pure_power_vars.add(support[0] + 1)
    off_cycle_labels = {
        label
        for label, cls in zip(graph.labels, graph.vertex_class)
        if cls != CYCLIC
    }

    if rng is None:
        rng = random.Random(0)
    entries = []
    for i in range(1, n + 1):
        if i not in pure_power_vars:
            entries.append(TEntry(i, 1, CERTAIN))
        elif i not in off_cycle_labels:
            entries.append(TEntry(i, 0, CERTAIN))
        elif probe:
            entries.append(_probe_t_index(family, i, rng))
        else:
            entries.append(TEntry(i, 1, BOUNDED))

    contributions = [
        SparsePoly.symbol_a(n, e.index).substitute(family.a_values, family.b_values)
        for e in entries
        if e.value == 1
    ]
    contributions.extend(factors)
    product = _radical_product(n, contributions)
    return RadicalResult(tuple(entries), tuple(factors), product)
