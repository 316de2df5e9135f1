"""Concrete syntax for centroidal terms.

::

    term    := 'not' term | 'pi1' term | 'if' term 'then' term 'else' term | postfix
    postfix := atom ('^+')*
    atom    := 'T' | 'F' | 'x' INT | 'const' ['-'] rational
             | '(' term '*' term ')' | '(' term ')'
             | '{' ['-'] coef term (('+'|'-') coef term)* '}'
    coef    := INT ['/' INT] ['*']

Prefix forms extend as far right as possible, so ``not x1^+`` is
``not (x1^+)``. ``#`` starts a comment running to the end of the line.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .calculus import (
    Affine,
    ConstF,
    ConstScalar,
    ConstT,
    If,
    Not,
    Pi1,
    Plus,
    Star,
    Term,
    Var,
)
from .errors import AffineSumNotOne, ParseError, VarOutOfRange
from .field import QQ, Mod

__all__ = ["parse_term", "print_term"]

_TOKEN = re.compile(
    r"(?P<ws>\s+|\#[^\n]*)"
    r"|(?P<plus>\^\+)"
    r"|(?P<int>\d+)"
    r"|(?P<word>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>[(){}*+\-/])"
)
_KEYWORDS = {"T", "F", "not", "pi1", "if", "then", "else", "const"}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "int":
            tokens.append(("INT", int(val), pos))
        elif kind == "plus":
            tokens.append(("^+", val, pos))
        elif kind == "word":
            if val in _KEYWORDS:
                tokens.append((val, val, pos))
            elif re.fullmatch(r"x\d+", val):
                tokens.append(("VAR", int(val[1:]), pos))
            else:
                raise ParseError(f"unknown word {val!r}", pos)
        elif kind == "sym":
            tokens.append((val, val, pos))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, n, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.n = n
        self.field = field

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "EOF" else repr(tok[0])
            raise ParseError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def term(self):
        kind = self.peek()
        if kind == "not":
            self.take()
            return Not(self.term())
        if kind == "pi1":
            self.take()
            return Pi1(self.term())
        if kind == "if":
            self.take()
            c = self.term()
            self.take("then")
            a = self.term()
            self.take("else")
            return If(c, a, self.term())
        t = self.atom()
        while self.peek() == "^+":
            self.take()
            t = Plus(t)
        return t

    def rational(self):
        num = self.take("INT")
        c = Fraction(num[1])
        if self.peek() == "/":
            self.take()
            den = self.take("INT")
            if den[1] == 0:
                raise ParseError("zero denominator", den[2])
            c /= den[1]
        try:
            return self.field(c)
        except ZeroDivisionError:
            raise ParseError(f"{c} is not defined in {self.field}", num[2]) from None

    def atom(self):
        kind, val, pos = self.take()
        if kind == "T":
            return ConstT()
        if kind == "F":
            return ConstF()
        if kind == "VAR":
            if not 1 <= val <= self.n:
                raise VarOutOfRange(val, self.n)
            return Var(val)
        if kind == "const":
            neg = self.peek() == "-"
            if neg:
                self.take()
            c = self.rational()
            return ConstScalar(-c if neg else c)
        if kind == "(":
            left = self.term()
            if self.peek() == "*":
                self.take()
                right = self.term()
                self.take(")")
                return Star(left, right)
            self.take(")")
            return left
        if kind == "{":
            return self.affine(pos)
        found = "end of input" if kind == "EOF" else repr(kind)
        raise ParseError(f"expected a term, found {found}", pos)

    def affine(self, pos):
        parts = []
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        while True:
            c = self.rational()
            if self.peek() == "*":
                self.take()
            parts.append((c if sign > 0 else -c, self.term()))
            kind = self.peek()
            if kind == "}":
                self.take()
                break
            if kind not in ("+", "-"):
                tok = self.tokens[self.i]
                raise ParseError("expected '+', '-' or '}' in affine combination", tok[2])
            sign = 1 if self.take()[0] == "+" else -1
        total = sum((c for c, _ in parts), Fraction(0))
        if total != 1:
            raise AffineSumNotOne(total)
        return Affine(tuple(parts))


def parse_term(text, n, field=QQ):
    """Parse ``text`` into a term over ``n`` argument pairs.

    Coefficients are read as elements of ``field``.
    """
    p = _Parser(text, n, field)
    t = p.term()
    p.take("EOF")
    return t


def _coef(c, first):
    if isinstance(c, Mod) or c >= 0:
        return str(c) if first else f"+ {c}"
    return f"-{-c}" if first else f"- {-c}"


def print_term(t):
    """Render ``t`` in the concrete syntax; :func:`parse_term` inverts it."""
    if isinstance(t, ConstT):
        return "T"
    if isinstance(t, ConstF):
        return "F"
    if isinstance(t, Var):
        return f"x{t.i}"
    if isinstance(t, ConstScalar):
        return f"const {t.alpha}"
    if isinstance(t, Not):
        return f"not {print_term(t.arg)}"
    if isinstance(t, Pi1):
        return f"pi1 {print_term(t.arg)}"
    if isinstance(t, If):
        return f"if {print_term(t.cond)} then {print_term(t.then)} else {print_term(t.orelse)}"
    if isinstance(t, Star):
        return f"({print_term(t.left)} * {print_term(t.right)})"
    if isinstance(t, Plus):
        inner = print_term(t.arg)
        if isinstance(t.arg, (Not, Pi1, If)):
            inner = f"({inner})"
        return f"{inner}^+"
    if isinstance(t, Affine):
        body = " ".join(
            f"{_coef(c, i == 0)} {print_term(u)}" for i, (c, u) in enumerate(t.parts)
        )
        return "{" + body + "}"
    if isinstance(t, Term):
        raise TypeError(f"no syntax for {type(t).__name__}")
    raise TypeError(f"{t!r} is not a term")
