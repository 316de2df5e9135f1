"""Worked examples: Berry's Gustave function and three binary "or" functions.

Each :class:`CorpusEntry` pairs a term with the polynomial pair it must
evaluate to. Gustave's function takes three arguments ``X, Y, Z`` bound to
``x1, x2, x3``; the or-functions take ``P, Q`` bound to ``x1, x2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import (
    TRUE,
    If,
    Not,
    Pi1,
    Plus,
    Star,
    Var,
    affine,
    eval_term,
)
from .polytext import parse_pair

__all__ = ["CorpusEntry", "corpus_gustave", "corpus_or", "OR_VARIANTS", "all_entries", "GUSTAVE_NAMES"]

GUSTAVE_NAMES = ["X1", "X2", "Y1", "Y2", "Z1", "Z2"]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    term: object
    expected: object
    n: int
    note: str = ""

    def evaluate(self):
        return eval_term(self.term, self.n, self.expected.field)

    def check(self):
        return self.evaluate() == self.expected


def _xyz(text):
    # write expected pairs with X,Y,Z aliases, parse in X1..X6
    for k, alias in enumerate(GUSTAVE_NAMES):
        text = text.replace(alias, f"V{k + 1}")
    return parse_pair(text.replace("V", "X"), n=3)


def corpus_gustave():
    """The eight steps P, Q, R, S, U, V, H, G leading to Gustave's function."""
    x, y, z = Var(1), Var(2), Var(3)
    P = Star(Star(x, y), z)
    Q = Star(Star(Not(x), Not(z)), Not(y))
    R = Pi1(Star(y, Not(z)))
    S = affine((1, Pi1(x)), (1, Not(x)), (-1, TRUE))
    U = Star(R, S)
    V = If(U, TRUE, Not(Plus(x)))
    H = affine((1, P), (1, Q), (-1, Not(Plus(V))))
    G = Not(H)
    return [
        CorpusEntry("P", P, _xyz("(X1*Y1*Z1, X2 + X1*Y2 + X1*Y1*Z2)"), 3, "P := (X*Y)*Z"),
        CorpusEntry("Q", Q, _xyz("(X2*Y2*Z2, X1 + X2*Z1 + X2*Y1*Z2)"), 3, "Q := (not X * not Z) * not Y"),
        CorpusEntry("R", R, _xyz("(Y1*Z2, 1 - Y1*Z2)"), 3, "R := pi1(Y * not Z)"),
        CorpusEntry("S", S, _xyz("(X1 + X2 - 1, 1)"), 3, "S := pi1(X) + not X - T"),
        CorpusEntry(
            "U",
            U,
            _xyz("(Z2*Y1*X1 + Z2*Y1*X2 - Z2*Y1, 1)"),
            3,
            "U := R * S, i.e. if R then S else F; the source wording 'else T' "
            "contradicts its own annotated value and is treated as a typo",
        ),
        CorpusEntry("V", V, _xyz("(Z2*Y1*X1 + Z2*Y1*X2 - Z2*Y1, X1 + X2)"), 3, "V := if U then T else not(X^+)"),
        CorpusEntry(
            "H",
            H,
            _xyz("(X1*Y1*Z1 + X2*Y2*Z2, X1*Y2 + Y1*Z2 + Z1*X2)"),
            3,
            "H := P + Q - not(V^+)",
        ),
        CorpusEntry(
            "G",
            G,
            _xyz("(X1*Y2 + Y1*Z2 + Z1*X2, X1*Y1*Z1 + X2*Y2*Z2)"),
            3,
            "G := not H, Gustave's function",
        ),
    ]


def _or_terms():
    p, q = Var(1), Var(2)
    left = If(p, TRUE, q)
    right = If(q, TRUE, p)
    return {
        "sequential": (left, "(X1 + X2*X3, X2*X4)", "if P then T else Q"),
        "symmetric": (
            affine((Fraction(1, 2), left), (Fraction(1, 2), right)),
            "(1/2*X1 + 1/2*X3 + 1/2*X2*X3 + 1/2*X1*X4, X2*X4)",
            "1/2 (if P then T else Q) + 1/2 (if Q then T else P)",
        ),
        "parallel": (
            affine((1, left), (1, right), (-1, If(p, Plus(q), q))),
            "(X1 + X3 - X1*X3, X2*X4)",
            "(if P then T else Q) + (if Q then T else P) - (if P then Q^+ else Q)",
        ),
    }


OR_VARIANTS = ("sequential", "symmetric", "parallel")


def corpus_or(variant):
    """One of the binary or-functions, with ``P = x1`` and ``Q = x2``."""
    try:
        term, expected, note = _or_terms()[variant]
    except KeyError:
        raise ValueError(f"unknown or variant {variant!r}; choose from {OR_VARIANTS}") from None
    return CorpusEntry(f"or-{variant}", term, parse_pair(expected, n=2), 2, note)


def all_entries():
    return corpus_gustave() + [corpus_or(v) for v in OR_VARIANTS]
