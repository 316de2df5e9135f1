"""Text and JSON forms of polynomials and polynomial pairs.

Grammar (whitespace-insensitive)::

    poly := ['-'] term (('+'|'-') term)*
    term := coef ('*'? mono)? | mono
    mono := factor ('*'? factor)*        factor := 'X' INT ('^' INT)?
    coef := INT ('/' INT)?

A pair is written ``(P1, P2)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ArityMismatch, ParseError
from .field import QQ, Mod
from .poly import Poly, PolyPair

__all__ = ["parse_poly", "parse_pair", "poly_to_json", "poly_from_json", "pair_to_json"]

_TOKEN = re.compile(r"\s*(?:(\d+)|X(\d+)|([-+*/^(),]))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("INT", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("VAR", int(m.group(2)), start))
        else:
            tokens.append((m.group(3), None, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _PolyParser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok

    def poly(self):
        """List of (Fraction coeff, {var_index: exponent}) terms, unchecked arity."""
        terms = []
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            terms.append(self.term(sign))
        return terms

    def term(self, sign):
        coef = Fraction(1)
        kind = self.peek()[0]
        if kind == "INT":
            coef = Fraction(self.take()[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("INT")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                coef /= den[1]
            if self.peek()[0] == "*":
                self.take()
                if self.peek()[0] != "VAR":
                    tok = self.peek()
                    raise ParseError("expected a variable after '*'", tok[2])
            if self.peek()[0] != "VAR":
                return sign * coef, {}
        elif kind != "VAR":
            tok = self.peek()
            raise ParseError(f"expected a term, found {tok[0]!r}", tok[2])
        return sign * coef, self.mono()

    def mono(self):
        exps = {}
        while True:
            _, k, pos = self.take("VAR")
            if k < 1:
                raise ParseError("variables are numbered from X1", pos)
            e = 1
            if self.peek()[0] == "^":
                self.take()
                e = self.take("INT")[1]
            exps[k] = exps.get(k, 0) + e
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                continue
            if kind != "VAR":
                return exps


def _max_var(terms):
    return max((k for _, exps in terms for k in exps), default=0)


def _build(terms, nvars, field):
    if _max_var(terms) > nvars:
        raise ArityMismatch(f"X{_max_var(terms)} used with only {nvars} variables")
    out = {}
    for c, exps in terms:
        e = [0] * nvars
        for k, v in exps.items():
            e[k - 1] = v
        key = tuple(e)
        out[key] = out.get(key, 0) + c
    return Poly(nvars, {m: field(c) for m, c in out.items()}, field)


def _default_nvars(max_var):
    return max(2, max_var + max_var % 2)


def parse_poly(text, nvars=None, field=QQ):
    """Parse ``text`` into a :class:`Poly`.

    Without ``nvars`` the arity is the smallest even count covering every
    variable mentioned (at least 2).
    """
    p = _PolyParser(text)
    terms = p.poly()
    p.take("EOF")
    if nvars is None:
        nvars = _default_nvars(_max_var(terms))
    return _build(terms, nvars, field)


def parse_pair(text, n=None, field=QQ):
    """Parse ``(P1, P2)`` into a :class:`PolyPair` over ``n`` argument pairs."""
    p = _PolyParser(text)
    p.take("(")
    first = p.poly()
    p.take(",")
    second = p.poly()
    p.take(")")
    p.take("EOF")
    nvars = 2 * n if n is not None else _default_nvars(max(_max_var(first), _max_var(second)))
    return PolyPair(_build(first, nvars, field), _build(second, nvars, field))


def _scalar_json(c):
    if isinstance(c, Mod):
        return {"res": str(c.value)}
    return {"num": str(c.numerator), "den": str(c.denominator)}


def poly_to_json(P):
    return [{"exps": list(exps), **_scalar_json(c)} for exps, c in P.terms()]


def pair_to_json(pp):
    return {"p1": poly_to_json(pp.p1), "p2": poly_to_json(pp.p2)}


def poly_from_json(data, nvars, field=QQ):
    terms = {}
    for entry in data:
        if "res" in entry:
            c = field(int(entry["res"]))
        else:
            c = field(Fraction(int(entry["num"]), int(entry["den"])))
        terms[tuple(entry["exps"])] = c
    return Poly(nvars, terms, field)
