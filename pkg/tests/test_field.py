from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from centroidal import GF, QQ, DivisionByZero, FieldMismatch, FieldSpec, Mod, NotPrime, scalar_arith


def test_rational_addition():
    assert scalar_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_gf5_multiplication():
    assert scalar_arith("mul", Mod(3, 5), Mod(4, 5)) == Mod(2, 5)


def test_gf7_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        scalar_arith("inv", Mod(0, 7))


def test_rational_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalar_arith("div", Fraction(1), Fraction(0))


@pytest.mark.parametrize(
    "x, y",
    [(Mod(1, 5), Mod(1, 7)), (Fraction(1, 2), Mod(1, 5)), (Mod(2, 3), 1)],
)
def test_field_mismatch(x, y):
    with pytest.raises(FieldMismatch):
        scalar_arith("add", x, y)


def test_mixing_primes_in_operators():
    with pytest.raises(FieldMismatch):
        Mod(1, 5) + Mod(1, 7)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 15, 91])
def test_non_prime_rejected(p):
    with pytest.raises(NotPrime):
        FieldSpec(p)


def test_canonical_forms():
    assert QQ(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ(Fraction(2, 4)).denominator == 2
    assert GF(5)(-1).value == 4
    assert GF(7)(Fraction(1, 2)) == Mod(4, 7)
    assert hash(GF(5)(7)) == hash(Mod(2, 5))


def test_field_parse():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("gf:7") == GF(7)
    with pytest.raises(ValueError):
        FieldSpec.parse("gf:x")
    with pytest.raises(NotPrime):
        FieldSpec.parse("gf:8")


def test_rationals_refuse_floats():
    with pytest.raises(TypeError):
        QQ(0.5)


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(), st.integers())
def test_gf_matches_integer_residues(p, a, b):
    F = GF(p)
    assert (F(a) * F(b)).value == (a * b) % p
    assert (F(a) - F(b)).value == (a - b) % p
    if b % p:
        assert F(a) / F(b) * F(b) == F(a)


def test_elements_and_points_order():
    F = GF(3)
    assert [int(x) for x in F.elements()] == [0, 1, 2]
    assert [tuple(int(x) for x in pt) for pt in F.points(2)][:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
