"""Totality, strong totality, and the kernel of ``phi``.

A pair is *strongly total* when ``phi(P1) + phi(P2) == 1`` as polynomials,
and *total* when ``P1 + P2`` equals 1 at every point whose argument pairs
each sum to one. Over the rationals the two notions agree; over GF(p) the
second is checked by exhaustive enumeration.

The kernel of ``phi`` on polynomials of degree at most ``d`` has the basis

    (prod_k (X_{2k-1} + X_{2k})^{i_k} - 1) * prod_k X_{2k-1}^{j_k}

over exponent vectors ``(I, J)`` with ``|I| + |J| <= d`` and ``I != 0``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field as dc_field
from typing import Optional, Tuple

from .errors import ArityMismatch, EnumerationTooLarge, NotInKernel
from .field import QQ
from .poly import Poly, PolyPair, embed_odd, eval_at, phi, split_coords
from .polytext import poly_to_json

__all__ = [
    "TotalityReport",
    "BasisElement",
    "KernelDecomposition",
    "DEFAULT_CAP",
    "is_strongly_total",
    "is_total",
    "total_points",
    "kernel_basis",
    "kernel_dim",
    "realize_basis_element",
    "decompose",
    "reconstruct",
]

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class TotalityReport:
    """Outcome of a totality check.

    ``defect`` is ``phi(P1) + phi(P2) - 1`` written over the odd-indexed
    variables of the original ``2n``. ``semantically_total`` is None when
    only strong totality was asked for.
    """

    strongly_total: bool
    defect: Poly
    semantically_total: Optional[bool] = None
    witness: Optional[Tuple] = None

    def to_json(self):
        return {
            "strongly_total": self.strongly_total,
            "defect": poly_to_json(self.defect),
            "semantically_total": self.semantically_total,
            "witness": None if self.witness is None else [str(a) for a in self.witness],
        }


def _defect(pp):
    return embed_odd(phi(pp.p1) + phi(pp.p2) - 1)


def is_strongly_total(pp):
    defect = _defect(pp)
    return TotalityReport(strongly_total=not defect, defect=defect)


def total_points(n, field):
    """Every total point of ``field**(2n)`` in lexicographic order of the free coordinates."""
    for free in field.points(n):
        point = []
        for a in free:
            point += [a, 1 - a]
        yield tuple(point)


def is_total(pp, field=None, cap=DEFAULT_CAP, samples=100, rng=None):
    """Strong totality plus the pointwise (semantic) verdict.

    Over GF(p) every one of the ``p**n`` total points is checked and the
    first failing point (lexicographic order) is reported as ``witness``.
    Over the rationals the semantic verdict equals the strong one; a few
    random total points are sampled as a sanity check of that direction.
    """
    if field is None:
        field = pp.field
    if field != pp.field:
        pp = PolyPair(_retype(pp.p1, field), _retype(pp.p2, field))
    report = is_strongly_total(pp)
    n = pp.n
    total = pp.p1 + pp.p2
    if field.is_finite:
        count = field.p**n
        if count > cap:
            raise EnumerationTooLarge(count, cap)
        for point in total_points(n, field):
            if eval_at(total, point) != 1:
                return TotalityReport(report.strongly_total, report.defect, False, point)
        return TotalityReport(report.strongly_total, report.defect, True, None)

    if report.strongly_total:
        rng = rng or random.Random(0)
        for _ in range(samples):
            free = [field(rng.randint(-50, 50)) / rng.randint(1, 50) for _ in range(n)]
            point = tuple(itertools.chain.from_iterable((a, 1 - a) for a in free))
            if eval_at(total, point) != 1:
                raise AssertionError(f"strongly total pair fails at total point {point}")
    return TotalityReport(report.strongly_total, report.defect, report.strongly_total, None)


def _retype(P, field):
    return Poly(P.nvars, {exps: field(c) for exps, c in P.terms()}, field)


@dataclass(frozen=True)
class BasisElement:
    """Exponents ``I`` on the pair sums and ``J`` on the true coordinates."""

    I: Tuple[int, ...]
    J: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(self.I))
        object.__setattr__(self, "J", tuple(self.J))
        if len(self.I) != len(self.J):
            raise ArityMismatch("I and J must have one exponent per pair")
        if not any(self.I):
            raise ValueError("at least one i_k must be nonzero")
        if any(e < 0 for e in self.I + self.J):
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self):
        return sum(self.I) + sum(self.J)

    def sort_key(self):
        """Ascending degree, lexicographically descending within a degree."""
        return (self.degree, tuple(-e for e in self.I + self.J))

    def __str__(self):
        return f"(I={self.I}, J={self.J})"


def _basis_order(elements):
    return sorted(elements, key=BasisElement.sort_key)


def kernel_basis(n, d):
    """All basis elements of ``ker(phi)`` in degree at most ``d``."""
    out = []
    for total in range(1, d + 1):
        for exps in _compositions(total, 2 * n):
            I, J = exps[:n], exps[n:]
            if any(I):
                out.append(BasisElement(I, J))
    return _basis_order(out)


def _compositions(total, parts):
    """Exponent vectors of length ``parts`` summing to ``total``."""
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        vec = []
        for c in cut + (total + parts - 1,):
            vec.append(c - prev - 1)
            prev = c
        yield tuple(vec)


def kernel_dim(n, d):
    return math.comb(2 * n + d, 2 * n) - math.comb(n + d, n)


def realize_basis_element(b, n=None, field=QQ):
    """Expand a basis element into a polynomial in ``2n`` variables."""
    if n is None:
        n = len(b.I)
    if len(b.I) != n:
        raise ArityMismatch(f"basis element has {len(b.I)} pairs, expected {n}")
    nvars = 2 * n
    sums = Poly.const(nvars, 1, field)
    for k, e in enumerate(b.I):
        if e:
            s = Poly.var(nvars, 2 * k + 1, field) + Poly.var(nvars, 2 * k + 2, field)
            sums = sums * s**e
    exps = [0] * nvars
    exps[0::2] = b.J
    return (sums - 1) * Poly.monomial(exps, 1, field)


@dataclass(frozen=True)
class KernelDecomposition:
    """``sum(c * realize(b) for c, b in parts)`` with nonzero ``c``."""

    parts: Tuple[Tuple[object, BasisElement], ...] = dc_field(default=())

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def as_dict(self):
        return {b: c for c, b in self.parts}


def decompose(P, d=None):
    """Coordinates of ``P`` (with ``phi(P) == 0``) over :func:`kernel_basis`.

    In the coordinates ``Y_k = X_{2k-1}``, ``S_k = X_{2k-1} + X_{2k}`` a
    kernel element reads ``sum_I c_I(Y) * S^I`` with ``sum_I c_I = 0``,
    hence equals ``sum_{I != 0} c_I(Y) * (S^I - 1)``; each ``Y``-monomial
    of ``c_I`` is one basis coordinate.
    """
    image = phi(P)
    if image:
        raise NotInKernel(embed_odd(image))
    n = P.n
    if d is None:
        d = max(P.degree, 0)
    parts = []
    for exps, c in split_coords(P).terms():
        J, I = exps[:n], exps[n:]
        if not any(I):
            continue
        b = BasisElement(I, J)
        if b.degree > d:
            raise ValueError(f"{b} exceeds the degree bound {d}")
        parts.append((c, b))
    parts.sort(key=lambda cb: cb[1].sort_key())
    return KernelDecomposition(tuple(parts))


def reconstruct(dec, n, field=QQ):
    total = Poly.zero(2 * n, field)
    for c, b in dec.parts:
        total = total + realize_basis_element(b, n, field).scale(c)
    return total
