"""Macaulay dual generators built from the reduction graph at socle degree.

The coefficient of X^alpha is a^(s-r) * b^r (times a multinomial factor under
differentiation) when the vertex x^alpha has a directed path with label counts
r to the target x1^(d1-1)...xn^(dn-1), and zero otherwise; s collects the
per-label maxima over all such paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import CoeffMonomial, Monomial, SparsePoly, as_fraction, multinomial
from .family import BinomialFamily
from .graph import build_graph

CONTRACTION = "contraction"
DIFFERENTIATION = "differentiation"
_CONVENTIONS = (CONTRACTION, DIFFERENTIATION)

Exponents = tuple[int, ...]


def _as_exponents(key) -> Exponents:
    if isinstance(key, Monomial):
        return key.exponents
    return tuple(int(e) for e in key)


def _check_convention(convention: str) -> None:
    if convention not in _CONVENTIONS:
        raise ValueError(f"convention must be one of {_CONVENTIONS}")


def _paths_to_target(family: BinomialFamily):
    """Reverse traversal of the in-tree of the socle-degree target sink.

    Returns (graph, {vertex index: label-count vector}, s) where s holds the
    per-label maxima.  Paths in a functional graph are unique; the traversal
    asserts each vertex is reached once.
    """
    n = family.n
    degree = family.socle_degree
    graph = build_graph(family, degree)
    target = Monomial(tuple(d - 1 for d in family.degrees))
    target_idx = graph.index[target]
    assert graph.succ[target_idx] is None, "the socle-degree target must be a sink"
    preds: dict[int, list[int]] = {}
    for v, s in enumerate(graph.succ):
        if s is not None:
            preds.setdefault(s, []).append(v)
    reach: dict[int, tuple[int, ...]] = {target_idx: (0,) * n}
    queue = [target_idx]
    while queue:
        v = queue.pop()
        rv = reach[v]
        for u in preds.get(v, ()):
            assert u not in reach, "duplicate path to the dual target"
            label = graph.labels[u]
            reach[u] = tuple(
                c + 1 if j == label - 1 else c for j, c in enumerate(rv)
            )
            queue.append(u)
    s = tuple(max(r[j] for r in reach.values()) for j in range(n))
    return graph, reach, s


def s_vector(family: BinomialFamily) -> tuple[int, ...]:
    """Per-label maxima of edge counts over all paths into the target sink."""
    _, _, s = _paths_to_target(family)
    return s


@dataclass(frozen=True)
class DualGenerator:
    """A dual generator with coefficient monomials per exponent vector."""

    family: BinomialFamily
    convention: str
    socle_degree: int
    s: tuple[int, ...]
    coeffs: Mapping[Exponents, CoeffMonomial]

    @property
    def n(self) -> int:
        return self.family.n

    def sorted_terms(self) -> list[tuple[Exponents, CoeffMonomial]]:
        return [(k, self.coeffs[k]) for k in sorted(self.coeffs, reverse=True)]

    def sparse_terms(self) -> dict[Exponents, SparsePoly]:
        """Coefficients as polynomials, with the family's values substituted."""
        out = {}
        for key, cm in self.coeffs.items():
            poly = cm.to_sparse().substitute(self.family.a_values, self.family.b_values)
            if not poly.is_zero():
                out[key] = poly
        return out

    def evaluate(self, a_vals=None, b_vals=None) -> dict[Exponents, Fraction]:
        """Numeric coefficients; values default to the family's assignment."""
        a_vals = self.family.a_values if a_vals is None else [as_fraction(v) for v in a_vals]
        b_vals = self.family.b_values if b_vals is None else [as_fraction(v) for v in b_vals]
        if None in tuple(a_vals) or None in tuple(b_vals):
            raise ValueError("evaluation needs a value for every symbol")
        out = {}
        for key, cm in self.coeffs.items():
            value = cm.evaluate(a_vals, b_vals)
            if value:
                out[key] = value
        return out

    def __str__(self) -> str:
        terms = self.sparse_terms()
        parts = []
        for key in sorted(terms, reverse=True):
            parts.append(f"{terms[key]}*{Monomial(key).render('X')}")
        return " + ".join(parts) if parts else "0"


def dual_generator(family: BinomialFamily, convention: str = CONTRACTION) -> DualGenerator:
    """Construct the dual generator of the family from its reduction graph."""
    _check_convention(convention)
    graph, reach, s = _paths_to_target(family)
    degree = family.socle_degree
    coeffs: dict[Exponents, CoeffMonomial] = {}
    for v, r in reach.items():
        alpha = graph.vertices[v].exponents
        scalar = multinomial(degree, alpha) if convention == DIFFERENTIATION else 1
        a_exp = tuple(x - y for x, y in zip(s, r))
        coeffs[alpha] = CoeffMonomial(Fraction(scalar), a_exp, r)
    return DualGenerator(family, convention, degree, s, coeffs)


def _falling(base: int, steps: int) -> int:
    out = 1
    for j in range(steps):
        out *= base - j
    return out


def _coerce_terms(terms, n: int | None = None):
    """Normalize {monomial/tuple: coeff} to exponent keys, and report whether
    any coefficient is symbolic (SparsePoly or CoeffMonomial)."""
    out = {}
    symbolic = False
    width = n
    for key, coeff in terms.items():
        exps = _as_exponents(key)
        if width is None:
            width = len(exps)
        if isinstance(coeff, CoeffMonomial):
            coeff = coeff.to_sparse()
        if isinstance(coeff, SparsePoly):
            symbolic = True
            if coeff.is_zero():
                continue
        else:
            coeff = as_fraction(coeff)
            if coeff == 0:
                continue
        out[exps] = coeff
    return out, symbolic, width


def _lift(coeff, n: int) -> SparsePoly:
    if isinstance(coeff, SparsePoly):
        return coeff
    return SparsePoly.constant(n, coeff)


def apply_action(f_terms, big_terms, convention: str = CONTRACTION):
    """Apply a polynomial in x to a polynomial in X by the chosen action.

    Contraction sends x^g o X^a to X^(a-g) when a >= g and to 0 otherwise;
    differentiation additionally multiplies by the falling factorials.  Both
    inputs map monomials (or exponent tuples) to coefficients, which may be
    rationals, coefficient monomials, or sparse polynomials.
    """
    _check_convention(convention)
    f_norm, f_symbolic, n = _coerce_terms(f_terms)
    big_norm, big_symbolic, n = _coerce_terms(big_terms, n)
    if n is None:
        return {}
    symbolic = f_symbolic or big_symbolic
    acc: dict[Exponents, object] = {}
    for gamma, cf in f_norm.items():
        for alpha, cF in big_norm.items():
            if any(g > a for g, a in zip(gamma, alpha)):
                continue
            if convention == DIFFERENTIATION:
                mult = 1
                for a, g in zip(alpha, gamma):
                    mult *= _falling(a, g)
            else:
                mult = 1
            key = tuple(a - g for a, g in zip(alpha, gamma))
            if symbolic:
                term = _lift(cf, n) * _lift(cF, n) * mult
                total = acc.get(key, SparsePoly.zero(n)) + term
                if total.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = total
            else:
                term = cf * cF * mult
                total = acc.get(key, Fraction(0)) + term
                if total:
                    acc[key] = total
                else:
                    acc.pop(key, None)
    return acc


@dataclass(frozen=True)
class AnnihilationResult:
    ok: bool
    residuals: dict[int, dict]

    def __bool__(self) -> bool:
        return self.ok


def verify_annihilation(family: BinomialFamily, F, convention: str = CONTRACTION) -> AnnihilationResult:
    """Check f_i o F = 0 for every generator, exactly.

    F may be a DualGenerator or a mapping from monomials/exponent tuples to
    coefficients.  Symbol values fixed by the family are substituted into the
    generator coefficients; everything else stays symbolic.
    """
    _check_convention(convention)
    if isinstance(F, DualGenerator):
        big_terms = F.sparse_terms()
    else:
        big_terms = F
    residuals: dict[int, dict] = {}
    for i in range(1, family.n + 1):
        f_terms = {
            family.lead_monomial(i): family.a_poly(i),
            family.tails[i - 1]: -family.b_poly(i),
        }
        res = apply_action(f_terms, big_terms, convention)
        if res:
            residuals[i] = res
    return AnnihilationResult(not residuals, residuals)


def dual_to_json(dual: DualGenerator) -> dict:
    terms = dual.sparse_terms()
    return {
        "D": dual.socle_degree,
        "convention": dual.convention,
        "s": list(dual.s),
        "terms": [
            {"alpha": list(key), "coeff": str(terms[key])}
            for key in sorted(terms, reverse=True)
        ],
    }
