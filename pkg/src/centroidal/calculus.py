"""The centroidal term language and its polynomial semantics.

Core terms are built from ``T``, ``F``, argument variables, ``if`` and
affine combinations whose coefficients sum to one. The sugar forms
(:class:`Not`, :class:`Star`, :class:`Plus`, :class:`Pi1`,
:class:`ConstScalar`) are abbreviations that :func:`desugar` expands into
core terms; :func:`eval_term` gives both the same meaning.

Every term evaluates to a :class:`~centroidal.poly.PolyPair` in ``2n``
variables, where ``x_i`` denotes the pair ``(X_{2i-1}, X_{2i})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import AffineSumNotOne, SecondComponentNonzero, VarOutOfRange
from .field import QQ, Mod
from .poly import Poly, PolyPair

__all__ = [
    "Term",
    "ConstT",
    "ConstF",
    "Var",
    "If",
    "Affine",
    "Not",
    "Star",
    "Plus",
    "Pi1",
    "ConstScalar",
    "TRUE",
    "FALSE",
    "affine",
    "eval_term",
    "desugar",
    "is_core",
    "flatten",
    "node_count",
    "max_var",
    "monomial_term",
    "recipe_a",
    "recipe_b",
    "recipe_c",
]


class Term:
    """Base class of all term nodes; instances are immutable and hashable."""

    __slots__ = ()

    def children(self):
        return ()


@dataclass(frozen=True)
class ConstT(Term):
    pass


@dataclass(frozen=True)
class ConstF(Term):
    pass


TRUE = ConstT()
FALSE = ConstF()


@dataclass(frozen=True)
class Var(Term):
    i: int

    def __post_init__(self):
        if not isinstance(self.i, int) or self.i < 1:
            raise VarOutOfRange(self.i, None)


@dataclass(frozen=True)
class If(Term):
    cond: Term
    then: Term
    orelse: Term

    def children(self):
        return (self.cond, self.then, self.orelse)


@dataclass(frozen=True)
class Affine(Term):
    """``sum(c * t for c, t in parts)`` with ``sum(c) == 1``, checked on construction."""

    parts: Tuple[Tuple[object, Term], ...]

    def __post_init__(self):
        parts = tuple((c, t) for c, t in self.parts)
        if not parts:
            raise ValueError("affine combination needs at least one part")
        for c, t in parts:
            if not isinstance(c, (int, Fraction, Mod)):
                raise TypeError(f"affine coefficient {c!r} is not an exact scalar")
            if not isinstance(t, Term):
                raise TypeError(f"{t!r} is not a term")
        total = sum((c for c, _ in parts), Fraction(0))
        if total != 1:
            raise AffineSumNotOne(total)
        object.__setattr__(self, "parts", parts)

    def children(self):
        return tuple(t for _, t in self.parts)


def affine(*parts):
    """Shorthand: ``affine((1, t), (1, u), (-1, v))``."""
    return Affine(tuple(parts))


@dataclass(frozen=True)
class Not(Term):
    arg: Term

    def children(self):
        return (self.arg,)


@dataclass(frozen=True)
class Star(Term):
    """``if left then right else F``; neither commutative nor associative."""

    left: Term
    right: Term

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Plus(Term):
    arg: Term

    def children(self):
        return (self.arg,)


@dataclass(frozen=True)
class Pi1(Term):
    arg: Term

    def children(self):
        return (self.arg,)


@dataclass(frozen=True)
class ConstScalar(Term):
    """The pair ``(alpha, 1 - alpha)``."""

    alpha: object

    def __post_init__(self):
        if not isinstance(self.alpha, (int, Fraction, Mod)):
            raise TypeError(f"{self.alpha!r} is not an exact scalar")


_SUGAR = (Not, Star, Plus, Pi1, ConstScalar)


# -- semantics ---------------------------------------------------------------


def _if(c, a, b):
    return PolyPair(c.p1 * a.p1 + c.p2 * b.p1, c.p1 * a.p2 + c.p2 * b.p2)


def eval_term(t, n, field=QQ):
    """Evaluate ``t`` to the pair of polynomials it denotes in ``2n`` variables."""
    nvars = 2 * n
    true = PolyPair.const(n, 1, 0, field)
    false = PolyPair.const(n, 0, 1, field)
    memo = {}

    def ev(t):
        key = id(t)
        hit = memo.get(key)
        if hit is not None:
            return hit[1]
        if isinstance(t, ConstT):
            v = true
        elif isinstance(t, ConstF):
            v = false
        elif isinstance(t, Var):
            if t.i > n:
                raise VarOutOfRange(t.i, n)
            v = PolyPair(Poly.var(nvars, 2 * t.i - 1, field), Poly.var(nvars, 2 * t.i, field))
        elif isinstance(t, If):
            v = _if(ev(t.cond), ev(t.then), ev(t.orelse))
        elif isinstance(t, Affine):
            p1 = Poly.zero(nvars, field)
            p2 = Poly.zero(nvars, field)
            for c, u in t.parts:
                c = field(c)
                if c:
                    pu = ev(u)
                    p1 = p1 + pu.p1.scale(c)
                    p2 = p2 + pu.p2.scale(c)
            v = PolyPair(p1, p2)
        # sugar: apply the core rule that the desugared form would use
        elif isinstance(t, Not):
            v = _if(ev(t.arg), false, true)
        elif isinstance(t, Star):
            v = _if(ev(t.left), ev(t.right), false)
        elif isinstance(t, Plus):
            v = _if(ev(t.arg), true, true)
        elif isinstance(t, Pi1):
            a = ev(t.arg)
            plus = _if(a, true, true)
            neg = _if(a, false, true)
            v = false + plus - neg
        elif isinstance(t, ConstScalar):
            alpha = field(t.alpha)
            v = true * alpha + false * (1 - alpha)
        else:
            raise TypeError(f"{t!r} is not a term")
        memo[key] = (t, v)
        return v

    return ev(t)


def desugar(t):
    """Expand every sugar node, returning a term made of core nodes only."""
    memo = {}

    def go(t):
        key = id(t)
        hit = memo.get(key)
        if hit is not None:
            return hit[1]
        if isinstance(t, (ConstT, ConstF, Var)):
            out = t
        elif isinstance(t, If):
            out = If(go(t.cond), go(t.then), go(t.orelse))
        elif isinstance(t, Affine):
            out = Affine(tuple((c, go(u)) for c, u in t.parts))
        elif isinstance(t, Not):
            out = If(go(t.arg), FALSE, TRUE)
        elif isinstance(t, Star):
            out = If(go(t.left), go(t.right), FALSE)
        elif isinstance(t, Plus):
            out = If(go(t.arg), TRUE, TRUE)
        elif isinstance(t, Pi1):
            out = affine((1, FALSE), (1, go(Plus(t.arg))), (-1, go(Not(t.arg))))
        elif isinstance(t, ConstScalar):
            out = affine((t.alpha, TRUE), (1 - t.alpha, FALSE))
        else:
            raise TypeError(f"{t!r} is not a term")
        memo[key] = (t, out)
        return out

    return go(t)


def is_core(t):
    if isinstance(t, _SUGAR):
        return False
    return all(is_core(u) for u in t.children())


def node_count(t):
    """Size of ``t`` as a tree (shared subterms counted at every occurrence)."""
    memo = {}

    def go(t):
        key = id(t)
        if key not in memo:
            memo[key] = (t, 1 + sum(go(u) for u in t.children()))
        return memo[key][1]

    return go(t)


def max_var(t):
    """Largest variable index occurring in ``t`` (0 if closed)."""
    if isinstance(t, Var):
        return t.i
    return max((max_var(u) for u in t.children()), default=0)


def flatten(t):
    """Merge nested affine nodes, combine repeated parts and drop zero weights.

    The result evaluates to the same pair as ``t``. A combination reducing
    to a single part with weight 1 is replaced by that part.
    """
    if isinstance(t, Affine):
        acc = {}
        order = []

        def collect(node, w):
            for c, u in node.parts:
                if isinstance(u, Affine):
                    collect(u, w * c)
                    continue
                u = flatten(u)
                if u in acc:
                    acc[u] = acc[u] + w * c
                else:
                    acc[u] = w * c
                    order.append(u)

        collect(t, 1)
        parts = tuple((acc[u], u) for u in order if acc[u])
        if len(parts) == 1:
            return parts[0][1]
        return Affine(parts)
    if isinstance(t, If):
        return If(flatten(t.cond), flatten(t.then), flatten(t.orelse))
    if isinstance(t, Star):
        return Star(flatten(t.left), flatten(t.right))
    if isinstance(t, (Not, Plus, Pi1)):
        return type(t)(flatten(t.arg))
    return t


# -- recipes -----------------------------------------------------------------


def monomial_term(exps):
    """A term whose first component is the monomial ``exps`` (in 2n variables).

    Factors are starred together left to right: ``x_i`` contributes
    ``X_{2i-1}`` and ``not x_i`` contributes ``X_{2i}``.
    """
    factors = []
    for k, e in enumerate(exps):
        f = Var(k // 2 + 1)
        if k % 2:
            f = Not(f)
        factors += [f] * e
    if not factors:
        return TRUE
    t = factors[0]
    for f in factors[1:]:
        t = Star(t, f)
    return t


def recipe_a(P1):
    """A term ``t`` with ``eval_term(t).p1 == P1``; the second component is unconstrained.

    Each monomial ``M`` with coefficient ``a`` becomes
    ``if const(m*a) then <M> else F`` and the ``m`` pieces are averaged with
    weight ``1/m``. Over GF(p) with ``p | m`` a dummy ``F`` part is added so
    that ``1/m`` exists.
    """
    field = P1.field
    terms = P1.terms()
    if not terms:
        return FALSE
    m = len(terms)
    pad = field.is_finite and m % field.p == 0
    if pad:
        m += 1
    scaled = []
    for exps, a in terms:
        mono = monomial_term(exps)
        w = a * m
        scaled.append(mono if w == 1 else If(ConstScalar(w), mono, FALSE))
    if pad:
        scaled.append(FALSE)
    if m == 1:
        return scaled[0]
    w = field(1) / m
    return Affine(tuple((w, s) for s in scaled))


def recipe_b(t, Q1, value=None):
    """From ``t`` evaluating to ``(P1, 0)``, a term evaluating to ``((P1 - 1) * Q1, 1)``.

    ``value`` may carry the already known evaluation of ``t``.
    """
    if value is None:
        value = eval_term(t, Q1.n, Q1.field)
    if value.p2:
        raise SecondComponentNonzero(value.p2)
    q = recipe_a(Q1)
    return affine((1, Star(q, t)), (1, FALSE), (-1, q))


def recipe_c(t, Q1):
    """From ``t`` evaluating to ``(P1, P2)``, a term evaluating to ``(P1 + Q1, P2 - Q1)``."""
    if not Q1:
        return t
    q = recipe_a(Q1)
    return affine((1, t), (1, Plus(q)), (-1, Not(q)))
