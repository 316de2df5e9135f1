"""Random generators and independent oracles shared by the test modules."""

import itertools
from fractions import Fraction

from centroidal import (
    Affine,
    ConstScalar,
    FALSE,
    If,
    Not,
    Pi1,
    Plus,
    Poly,
    PolyPair,
    Star,
    TRUE,
    Var,
    kernel_basis,
    realize_basis_element,
)


def random_scalar(rng, field, bound=10, nonzero=False):
    while True:
        if field.is_finite:
            c = field(rng.randrange(field.p))
        else:
            c = field(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        if c or not nonzero:
            return c


def random_poly(rng, nvars, field, max_deg=4, max_terms=5, bound=10):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, max_deg)
        exps = [0] * nvars
        for _ in range(deg):
            exps[rng.randrange(nvars)] += 1
        terms[tuple(exps)] = random_scalar(rng, field, bound)
    return Poly(nvars, terms, field)


def random_term(rng, n, depth, field, leaf_bias=0.1):
    """A random sugar term; branching thins out with depth to keep degrees small."""
    if depth <= 0 or rng.random() < leaf_bias:
        kind = rng.randrange(6)
        if kind == 0:
            return TRUE
        if kind == 1:
            return FALSE
        if kind == 2:
            return ConstScalar(random_scalar(rng, field, 5))
        return Var(rng.randint(1, n))
    sub = lambda: random_term(rng, n, depth - 1, field, min(0.9, leaf_bias + 0.12))
    kind = rng.randrange(6)
    if kind == 0:
        return If(sub(), sub(), sub())
    if kind == 1:
        k = rng.randint(1, 3)
        coefs = [random_scalar(rng, field, 5) for _ in range(k - 1)]
        coefs.append(1 - sum(coefs, field.zero))
        return Affine(tuple((c, sub()) for c in coefs))
    if kind == 2:
        return Not(sub())
    if kind == 3:
        return Star(sub(), sub())
    if kind == 4:
        return Plus(sub())
    return Pi1(sub())


def random_kernel_element(rng, n, d, field, max_parts=4, bound=10):
    basis = kernel_basis(n, d)
    total = Poly.zero(2 * n, field)
    chosen = []
    for b in rng.sample(basis, min(len(basis), rng.randint(0, max_parts))):
        c = random_scalar(rng, field, bound, nonzero=True)
        chosen.append((c, b))
        total = total + realize_basis_element(b, n, field).scale(c)
    return total, chosen


def random_strongly_total(rng, n, field, max_deg=4, bound=10):
    """(P1, 1 - P1 + K) with P1 random and K a random kernel element."""
    p1 = random_poly(rng, 2 * n, field, max_deg=max_deg, bound=bound)
    k, _ = random_kernel_element(rng, n, max_deg, field, bound=bound)
    return PolyPair(p1, 1 - p1 + k)


def naive_mul(P, Q):
    """Nested-loop convolution over explicit (monomial, coefficient) lists."""
    out = {}
    for ma, ca in P.terms():
        for mb, cb in Q.terms():
            m = tuple(a + b for a, b in zip(ma, mb))
            out[m] = out.get(m, P.field.zero) + ca * cb
    return Poly(P.nvars, out, P.field)


def count_by_enumeration(n, d):
    return sum(1 for e in itertools.product(range(d + 1), repeat=n) if sum(e) <= d)


def solve_coordinates(P, basis, n, field):
    """Coordinates of ``P`` over ``basis`` by Gaussian elimination on coefficient vectors."""
    cols = [realize_basis_element(b, n, field) for b in basis]
    monos = sorted({m for c in cols for m, _ in c.terms()} | {m for m, _ in P.terms()})
    rows = [[c.coeff(m) for c in cols] + [P.coeff(m)] for m in monos]
    ncols = len(cols)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            raise ValueError("basis columns are dependent")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        raise ValueError("not in the span")
    return {basis[c]: rows[i][-1] for i, c in enumerate(pivots) if rows[i][-1]}


def phi_by_points(P, field, points):
    """Values of phi(P) computed pointwise, independent of substitution code."""
    from centroidal import eval_at

    out = []
    for free in points:
        pt = []
        for a in free:
            pt += [a, 1 - a]
        out.append(eval_at(P, pt))
    return out
