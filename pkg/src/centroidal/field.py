"""Exact scalars: rationals via :class:`fractions.Fraction`, GF(p) via :class:`Mod`.

A :class:`FieldSpec` names the ambient field and converts Python numbers
into its canonical scalar type::

    >>> QQ(1) / 3 + Fraction(1, 6)
    Fraction(1, 2)
    >>> GF(5)(3) * 4
    Mod(2, 5)
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, NotPrime

__all__ = ["FieldSpec", "Mod", "QQ", "GF", "is_prime", "field_of", "scalar_arith"]


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % k for k in range(3, math.isqrt(p) + 1, 2))


class Mod:
    """Element of GF(p), stored as its residue in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Mod is immutable")

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) and GF({other.p}) elements do not mix")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            den = other.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"{other} has no image in GF({self.p})")
            return other.numerator * pow(den, -1, self.p) % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Mod(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Mod(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Mod(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Mod(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return Mod(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Mod(v, self.p) / self

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (1 / self) ** -e
        return Mod(pow(self.value, e, self.p), self.p)

    def inverse(self):
        return 1 / self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        try:
            v = self._coerce(other)
        except DivisionByZero:
            return False
        if v is None:
            return NotImplemented
        return self.value == v

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: the rationals when ``p`` is None, else GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text):
        """Parse a field selector: ``q`` or ``gf:<prime>``."""
        t = text.strip().lower()
        if t in ("q", "qq"):
            return QQ
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad field selector {text!r}") from None
            return cls(p)
        raise ValueError(f"bad field selector {text!r}; expected 'q' or 'gf:<p>'")

    @property
    def is_finite(self):
        return self.p is not None

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        if self.p is None:
            if isinstance(x, Mod):
                raise FieldMismatch(f"GF({x.p}) element used where a rational is expected")
            if isinstance(x, float):
                raise TypeError("floating point values are not exact scalars")
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatch(f"GF({x.p}) element used in GF({self.p})")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, (int, Fraction)):
            return Mod(0, self.p) + x
        raise TypeError(f"cannot convert {x!r} to GF({self.p})")

    def contains(self, x):
        if self.p is None:
            return isinstance(x, Fraction)
        return isinstance(x, Mod) and x.p == self.p

    def elements(self):
        """All field elements in increasing residue order (finite fields only)."""
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return [Mod(v, self.p) for v in range(self.p)]

    def points(self, k):
        """Lexicographic iterator over ``field**k`` (finite fields only)."""
        return itertools.product(self.elements(), repeat=k)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


QQ = FieldSpec()


def GF(p):
    return FieldSpec(p)


def field_of(x):
    if isinstance(x, Mod):
        return FieldSpec(x.p)
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"{x!r} is not an exact scalar")


def scalar_arith(op, x, y=None):
    """Strict scalar arithmetic: both operands must live in the same field.

    ``op`` is one of add, sub, mul, div, neg, inv.
    """
    fx = field_of(x)
    if y is not None and field_of(y) != fx:
        raise FieldMismatch(f"operands from {fx} and {field_of(y)}")
    x = fx(x)
    if op == "neg":
        return -x
    if op == "inv":
        if not x:
            raise DivisionByZero(f"0 has no inverse in {fx}")
        return 1 / x
    if y is None:
        raise TypeError(f"{op} needs two operands")
    y = fx(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise DivisionByZero(f"division by zero in {fx}")
        return x / y
    raise ValueError(f"unknown scalar operation {op!r}")
