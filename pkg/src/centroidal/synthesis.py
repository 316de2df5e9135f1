"""Build a centroidal term for any strongly total pair.

The strongly total single polynomials form the affine space ``1 + ker(phi)``,
so it suffices to reach ``(1 + b, 0)`` for each kernel basis element ``b``,
average those with the decomposition weights, and shift ``(P1 + P2, 0)``
back to ``(P1, P2)`` with recipe (c).
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import (
    TRUE,
    Affine,
    Plus,
    Star,
    Var,
    eval_term,
    flatten,
    node_count,
    recipe_b,
    recipe_c,
)
from .errors import NotPrime, NotStronglyTotal
from .field import QQ, FieldSpec, is_prime
from .poly import Poly, PolyPair
from .syntax import print_term
from .totality import decompose, is_strongly_total, is_total

__all__ = ["SynthesisResult", "basis_term", "synthesize", "counterexample_pair"]


@dataclass(frozen=True)
class SynthesisResult:
    term: object
    verified: bool
    evaluation: PolyPair
    nodes: int
    basis_count: int

    def to_json(self):
        return {
            "term": print_term(self.term),
            "verified": self.verified,
            "nodes": self.nodes,
            "basis_count": self.basis_count,
        }


def basis_term(b, n=None, field=QQ):
    """A term evaluating to ``(1 + realize(b), 0)``."""
    if n is None:
        n = len(b.I)
    factors = [Plus(Var(k + 1)) for k, e in enumerate(b.I) for _ in range(e)]
    sums = factors[0]
    for f in factors[1:]:
        sums = Star(sums, f)
    nvars = 2 * n
    sums_value = Poly.const(nvars, 1, field)
    for k, e in enumerate(b.I):
        if e:
            s = Poly.var(nvars, 2 * k + 1, field) + Poly.var(nvars, 2 * k + 2, field)
            sums_value = sums_value * s**e
    exps = [0] * nvars
    exps[0::2] = b.J
    y = Poly.monomial(exps, 1, field)
    shifted = recipe_b(sums, y, value=PolyPair(sums_value, Poly.zero(nvars, field)))
    return Plus(shifted)


def synthesize(pp, field=None):
    """A verified centroidal term evaluating exactly to ``pp``.

    Raises :class:`NotStronglyTotal` when ``pp`` lies outside the calculus.
    """
    if field is None:
        field = pp.field
    if field != pp.field:
        raise ValueError(f"pair is over {pp.field}, not {field}")
    report = is_strongly_total(pp)
    if not report.strongly_total:
        raise NotStronglyTotal(report.defect, finite=field.is_finite)
    n = pp.n
    d = pp.p1 + pp.p2 - 1
    dec = decompose(d)

    if dec.parts:
        parts = [(c, basis_term(b, n, field)) for c, b in dec.parts]
        rest = 1 - sum((c for c, _ in dec.parts), field.zero)
        if rest:
            parts.append((rest, TRUE))
        summed = Affine(tuple(parts)) if len(parts) > 1 else parts[0][1]
    else:
        summed = TRUE

    term = flatten(recipe_c(summed, -pp.p2))
    value = eval_term(term, n, field)
    verified = value == pp
    if not verified:
        raise AssertionError(f"synthesized term evaluates to {value}, expected {pp}")
    return SynthesisResult(term, verified, value, node_count(term), len(dec))


def counterexample_pair(p):
    """The pair ``(1 + X(X+1)...(X+p-1), 0)`` over GF(p), in one argument.

    It is total (the product vanishes on every field element) but not
    strongly total, since the product equals ``X1^p - X1``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    field = FieldSpec(p)
    x = Poly.var(2, 1, field)
    prod = Poly.const(2, 1, field)
    for a in range(p):
        prod = prod * (x + a)
    pair = PolyPair(1 + prod, Poly.zero(2, field))
    assert prod == x**p - x
    report = is_total(pair, field)
    assert report.semantically_total and not report.strongly_total
    return pair
