import random
from fractions import Fraction

import pytest

from centroidal import (
    FALSE,
    GF,
    QQ,
    TRUE,
    AffineSumNotOne,
    ConstScalar,
    If,
    Not,
    ParseError,
    Pi1,
    Plus,
    Star,
    Var,
    VarOutOfRange,
    affine,
    parse_term,
    print_term,
)
from helpers import random_term


@pytest.mark.parametrize(
    "text, term",
    [
        ("T", TRUE),
        ("F", FALSE),
        ("if x1 then T else F", If(Var(1), TRUE, FALSE)),
        ("(x1 * x2)", Star(Var(1), Var(2))),
        ("x1^+", Plus(Var(1))),
        ("x1^+^+", Plus(Plus(Var(1)))),
        ("not x1^+", Not(Plus(Var(1)))),
        ("(not x1)^+", Plus(Not(Var(1)))),
        ("pi1 (x1 * not x2)", Pi1(Star(Var(1), Not(Var(2))))),
        ("{1/2 T + 1/2 F}", affine((Fraction(1, 2), TRUE), (Fraction(1, 2), FALSE))),
        ("{1 pi1 x1 + 1 not x1 - 1 T}", affine((1, Pi1(Var(1))), (1, Not(Var(1))), (-1, TRUE))),
        ("{-1 T + 2* F}", affine((-1, TRUE), (2, FALSE))),
        ("const -2/3", ConstScalar(Fraction(-2, 3))),
        ("if x1 then if x2 then T else F else x1", If(Var(1), If(Var(2), TRUE, FALSE), Var(1))),
        ("  T # trailing comment\n", TRUE),
    ],
)
def test_parse(text, term):
    assert parse_term(text, 2) == term


def test_print_examples():
    assert print_term(TRUE) == "T"
    assert print_term(Star(Var(1), Var(2))) == "(x1 * x2)"
    assert print_term(Plus(Not(Var(1)))) == "(not x1)^+"


def test_affine_sum_reported():
    with pytest.raises(AffineSumNotOne) as info:
        parse_term("{1/2 T + 1/3 F}", 1)
    assert info.value.total == Fraction(5, 6)


def test_var_out_of_range():
    with pytest.raises(VarOutOfRange):
        parse_term("x3", 2)
    with pytest.raises(VarOutOfRange):
        parse_term("x0", 2)


@pytest.mark.parametrize(
    "text, pos",
    [("if x1 then T", 12), ("(x1 * x2", 8), ("{1 T + }", 7), ("T T", 2), ("x1 ? T", 3), ("foo", 0)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_term(text, 2)
    assert info.value.pos == pos


def test_star_requires_parentheses():
    with pytest.raises(ParseError):
        parse_term("x1 * x2", 2)


def test_gf_coefficients_parse():
    t = parse_term("{3 T + 3 F}", 1, GF(5))
    assert t.parts[0][0] == GF(5)(3)
    with pytest.raises(AffineSumNotOne):
        parse_term("{3 T + 3 F}", 1, QQ)
    with pytest.raises(ParseError):
        parse_term("{1/5 T + 4/5 F}", 1, GF(5))


@pytest.mark.parametrize("field", [QQ, GF(5)])
def test_round_trip_random_terms(field):
    rng = random.Random(17)
    for _ in range(500):
        n = rng.randint(1, 3)
        t = random_term(rng, n, 6, field)
        assert parse_term(print_term(t), n, field) == t
