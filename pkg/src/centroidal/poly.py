"""Sparse multivariate polynomials with exact coefficients.

A :class:`Poly` maps exponent tuples to nonzero field scalars. Boolean
functions of ``n`` arguments live in ``2n`` variables, with pair ``i``
owning ``X_{2i-1}`` (the "true" coordinate) and ``X_{2i}`` (the "false"
coordinate). User-facing indices are 1-based; exponent tuples are 0-based.

Terms are kept in graded lexicographic order: higher total degree first,
ties broken by comparing exponent tuples (``X1 > X2 > ...``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch, FieldMismatch
from .field import QQ, FieldSpec, Mod, field_of

__all__ = [
    "Poly",
    "PolyPair",
    "grlex_key",
    "eval_at",
    "substitute",
    "phi",
    "embed_odd",
    "split_coords",
    "from_split_coords",
    "count_monomials_at_most",
    "swap_pairs",
]


def grlex_key(exps):
    return (sum(exps), exps)


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables over ``field``."""

    __slots__ = ("nvars", "field", "_terms", "_hash")

    def __init__(self, nvars, terms=None, field=QQ):
        out = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ArityMismatch(f"monomial {exps} has {len(exps)} exponents, expected {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = field(c)
            if exps in out:
                c = out[exps] + c
            out[exps] = c
        self._init(nvars, field, {m: c for m, c in out.items() if c})

    def _init(self, nvars, field, terms):
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, nvars, field, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._init(nvars, field, terms)
        return obj

    @classmethod
    def zero(cls, nvars, field=QQ):
        return cls._raw(nvars, field, {})

    @classmethod
    def const(cls, nvars, c, field=QQ):
        c = field(c)
        return cls._raw(nvars, field, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, k, field=QQ):
        """The variable ``X_k`` (1-based)."""
        if not 1 <= k <= nvars:
            raise ArityMismatch(f"X{k} does not exist among {nvars} variables")
        exps = [0] * nvars
        exps[k - 1] = 1
        return cls._raw(nvars, field, {tuple(exps): field.one})

    @classmethod
    def monomial(cls, exps, c=1, field=QQ):
        return cls(len(exps), {tuple(exps): c}, field)

    # -- inspection ---------------------------------------------------------

    @property
    def n(self):
        """Number of boolean argument pairs (``nvars // 2``)."""
        return self.nvars // 2

    def terms(self):
        """``[(exps, coeff), ...]`` in graded lexicographic order, largest first."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coeff(self, exps):
        return self._terms.get(tuple(exps), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms())

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return all(not any(m) for m in self._terms)

    def constant_coeff(self):
        return self.coeff((0,) * self.nvars)

    def normalized(self):
        """Re-canonicalize (idempotent on any value the class produces)."""
        return Poly(self.nvars, dict(self._terms), self.field)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, Mod) and self.field.p != other.p:
            raise FieldMismatch(f"{field_of(other)} scalar with {self.field} polynomial")
        if isinstance(other, (int, Fraction, Mod)):
            return Poly.const(self.nvars, other, self.field)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(self.nvars, self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, self.field, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return Poly.zero(self.nvars, self.field)
        return Poly._raw(self.nvars, self.field, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction, Mod)):
                return self.scale(other)
            return NotImplemented
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly.zero(self.nvars, self.field)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if not any(mb):
                return Poly._raw(self.nvars, self.field, {m: c * cb for m, c in a.items()})
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                c = ca * cb
                s = out.get(m)
                out[m] = c if s is None else s + c
        return Poly._raw(self.nvars, self.field, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly.const(self.nvars, 1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.nvars == other.nvars
                and self.field == other.field
                and self._terms == other._terms
            )
        try:
            other = self._coerce(other)
        except (FieldMismatch, ArityMismatch):
            return False
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.nvars, self.field, frozenset(self._terms.items())))
            )
        return self._hash

    # -- printing -----------------------------------------------------------

    def format(self, names=None):
        """Render with ``names[k]`` for variable ``k`` (default ``X1..Xn``)."""
        if names is None:
            names = [f"X{k + 1}" for k in range(self.nvars)]
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            neg = not isinstance(c, Mod) and c < 0
            mag = -c if neg else c
            factors = []
            for k, e in enumerate(exps):
                if e == 1:
                    factors.append(names[k])
                elif e > 1:
                    factors.append(f"{names[k]}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.nvars}, {self.format()!r}, {self.field})"


@dataclass(frozen=True)
class PolyPair:
    """A boolean function ``B^n -> B``: the pair ``(P1, P2)`` in ``2n`` variables."""

    p1: Poly
    p2: Poly

    def __post_init__(self):
        if self.p1.nvars != self.p2.nvars:
            raise ArityMismatch(f"components have {self.p1.nvars} and {self.p2.nvars} variables")
        if self.p1.field != self.p2.field:
            raise FieldMismatch(f"components over {self.p1.field} and {self.p2.field}")

    @classmethod
    def const(cls, n, a, b, field=QQ):
        return cls(Poly.const(2 * n, a, field), Poly.const(2 * n, b, field))

    @property
    def nvars(self):
        return self.p1.nvars

    @property
    def n(self):
        return self.p1.nvars // 2

    @property
    def field(self):
        return self.p1.field

    def __iter__(self):
        return iter((self.p1, self.p2))

    def __add__(self, other):
        return PolyPair(self.p1 + other.p1, self.p2 + other.p2)

    def __sub__(self, other):
        return PolyPair(self.p1 - other.p1, self.p2 - other.p2)

    def __mul__(self, c):
        return PolyPair(self.p1.scale(c), self.p2.scale(c))

    __rmul__ = __mul__

    def eval_at(self, point):
        return eval_at(self.p1, point), eval_at(self.p2, point)

    def format(self, names=None):
        return f"({self.p1.format(names)}, {self.p2.format(names)})"

    def __str__(self):
        return self.format()


def eval_at(P, point):
    """Exact value of ``P`` at ``point`` (one scalar per variable)."""
    if len(point) != P.nvars:
        raise ArityMismatch(f"point has {len(point)} coordinates, polynomial has {P.nvars} variables")
    f = P.field
    a = [f(x) for x in point]
    powers = {}
    total = f.zero
    for exps, c in P._terms.items():
        v = c
        for k, e in enumerate(exps):
            if e:
                key = (k, e)
                pw = powers.get(key)
                if pw is None:
                    pw = powers[key] = a[k] ** e
                v = v * pw
        total = total + v
    return total


def substitute(P, images, nvars=None):
    """Replace variable ``k`` of ``P`` with the polynomial ``images[k]``.

    All images must share one arity, which becomes the arity of the result.
    """
    if len(images) != P.nvars:
        raise ArityMismatch(f"{len(images)} images for {P.nvars} variables")
    if nvars is None:
        nvars = images[0].nvars if images else 0
    f = P.field
    for img in images:
        if img.nvars != nvars:
            raise ArityMismatch("substitution images disagree on arity")
    powers = {}
    one = Poly.const(nvars, 1, f)
    total = Poly.zero(nvars, f)
    for exps, c in P._terms.items():
        v = one
        for k, e in enumerate(exps):
            if e:
                pw = powers.get((k, e))
                if pw is None:
                    pw = powers[(k, e)] = images[k] ** e
                v = v * pw
        total = total + v.scale(c)
    return total


def phi(P):
    """``P(X1, 1-X1, ..., Xn, 1-Xn)``: a polynomial in ``n`` variables.

    Variable ``k`` of the result stands for ``X_{2k-1}``; use
    :func:`embed_odd` to view it back among the ``2n`` variables.
    """
    if P.nvars % 2:
        raise ArityMismatch(f"phi needs an even number of variables, got {P.nvars}")
    n = P.nvars // 2
    f = P.field
    images = []
    for k in range(n):
        y = Poly.var(n, k + 1, f)
        images += [y, 1 - y]
    return substitute(P, images, n)


def embed_odd(Q):
    """Embed a polynomial in ``n`` variables into ``2n`` variables via ``k -> X_{2k-1}``."""
    out = {}
    for exps, c in Q._terms.items():
        e = [0] * (2 * Q.nvars)
        e[0::2] = exps
        out[tuple(e)] = c
    return Poly._raw(2 * Q.nvars, Q.field, out)


def split_coords(P):
    """Change of variables ``X_{2k-1} -> Y_k``, ``X_{2k} -> S_k - Y_k``.

    The result has variables ``(Y_1..Y_n, S_1..S_n)``, in that order. Setting
    every ``S_k`` to 1 recovers :func:`phi`.
    """
    n = P.nvars // 2
    f = P.field
    images = []
    for k in range(n):
        y = Poly.var(2 * n, k + 1, f)
        s = Poly.var(2 * n, n + k + 1, f)
        images += [y, s - y]
    return substitute(P, images, 2 * n)


def from_split_coords(P):
    """Inverse of :func:`split_coords`: ``Y_k -> X_{2k-1}``, ``S_k -> X_{2k-1} + X_{2k}``."""
    n = P.nvars // 2
    f = P.field
    ys, ss = [], []
    for k in range(n):
        x_true = Poly.var(2 * n, 2 * k + 1, f)
        x_false = Poly.var(2 * n, 2 * k + 2, f)
        ys.append(x_true)
        ss.append(x_true + x_false)
    return substitute(P, ys + ss, 2 * n)


def swap_pairs(P, i, j):
    """Exchange argument pairs ``i`` and ``j`` (1-based) of a 2n-variable polynomial."""
    perm = list(range(P.nvars))
    a, b = 2 * (i - 1), 2 * (j - 1)
    perm[a], perm[b] = perm[b], perm[a]
    perm[a + 1], perm[b + 1] = perm[b + 1], perm[a + 1]
    out = {}
    for exps, c in P._terms.items():
        out[tuple(exps[perm[k]] for k in range(P.nvars))] = c
    return Poly._raw(P.nvars, P.field, out)


def count_monomials_at_most(n, d):
    """Number of monomials of degree at most ``d`` in ``n`` variables."""
    return math.comb(n + d, n)
