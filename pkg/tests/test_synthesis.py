import random

import pytest

from centroidal import (
    GF,
    QQ,
    TRUE,
    Affine,
    BasisElement,
    NotPrime,
    NotStronglyTotal,
    Poly,
    PolyPair,
    basis_term,
    counterexample_pair,
    eval_term,
    is_strongly_total,
    is_total,
    kernel_basis,
    parse_pair,
    parse_poly,
    print_term,
    realize_basis_element,
    synthesize,
)
from helpers import random_strongly_total, random_term


def B(I, J):
    return BasisElement(tuple(I), tuple(J))


def test_basis_term_examples():
    s = parse_poly("X1 + X2", 2)
    x1 = parse_poly("X1", 2)
    cases = [(B([1], [0]), s), (B([2], [0]), s * s), (B([1], [1]), 1 + (s - 1) * x1)]
    for b, p1 in cases:
        assert eval_term(basis_term(b, 1), 1) == PolyPair(p1, Poly.zero(2))


@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_basis_terms_for_all_small_elements(field):
    for n in (1, 2, 3):
        for b in kernel_basis(n, 3):
            got = eval_term(basis_term(b, n, field), n, field)
            assert got.p1 == 1 + realize_basis_element(b, n, field)
            assert got.p2.is_zero()


def test_synthesize_true():
    r = synthesize(parse_pair("(1, 0)"))
    assert r.term == TRUE and r.verified and r.basis_count == 0


def test_synthesize_negation():
    pp = parse_pair("(X2, X1)")
    r = synthesize(pp)
    assert r.verified and eval_term(r.term, 1) == pp


def test_synthesize_gustave():
    g = parse_pair("(X1*X4 + X3*X6 + X5*X2, X1*X3*X5 + X2*X4*X6)")
    r = synthesize(g)
    assert r.verified and eval_term(r.term, 3) == g


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_counterexample_rejected(p):
    pp = counterexample_pair(p)
    with pytest.raises(NotStronglyTotal) as info:
        synthesize(pp)
    assert info.value.finite
    x = Poly.var(2, 1, GF(p))
    assert info.value.defect == x**p - x


def test_synthesize_rejects_plain_non_total():
    with pytest.raises(NotStronglyTotal):
        synthesize(parse_pair("(X1, X1)"))


def test_counterexample_closed_forms():
    # X(X+1) = X^2 + X over GF(2); X(X+1)(X+2) = X^3 + 3X^2 + 2X = X^3 + 2X over GF(3)
    assert counterexample_pair(2) == parse_pair("(1 + X1 + X1^2, 0)", 1, GF(2))
    assert counterexample_pair(3) == parse_pair("(1 + 2*X1 + X1^3, 0)", 1, GF(3))
    r = is_total(counterexample_pair(5))
    assert r.semantically_total and not r.strongly_total


def test_counterexample_needs_prime():
    with pytest.raises(NotPrime):
        counterexample_pair(4)


def test_round_trip_random_q():
    rng = random.Random(101)
    for _ in range(60):
        n = rng.randint(1, 3)
        pp = random_strongly_total(rng, n, QQ)
        r = synthesize(pp)
        assert r.verified and eval_term(r.term, n) == pp


def test_round_trip_term_values():
    rng = random.Random(103)
    for _ in range(60):
        n = rng.randint(1, 3)
        pp = eval_term(random_term(rng, n, 5, QQ), n)
        assert eval_term(synthesize(pp).term, n) == pp


@pytest.mark.parametrize("p", [2, 3, 5])
def test_round_trip_finite_fields(p):
    F = GF(p)
    rng = random.Random(p * 7)
    for _ in range(30):
        n = rng.randint(1, 2)
        pp = random_strongly_total(rng, n, F, max_deg=3)
        assert eval_term(synthesize(pp).term, n, F) == pp


def test_summed_affine_has_unit_weight():
    # the intermediate sum over basis terms must itself be a valid affine node
    rng = random.Random(107)
    for _ in range(30):
        n = rng.randint(1, 3)
        pp = random_strongly_total(rng, n, QQ)
        r = synthesize(pp)
        stack = [r.term]
        while stack:
            t = stack.pop()
            if isinstance(t, Affine):
                assert sum((c for c, _ in t.parts), 0) == 1
            stack.extend(t.children())


def test_result_json():
    r = synthesize(parse_pair("(X2, X1)"))
    data = r.to_json()
    assert set(data) == {"term", "verified", "nodes", "basis_count"}
    assert data["verified"] is True and data["term"] == print_term(r.term)
    assert data["basis_count"] == 1


def test_field_argument_must_match():
    with pytest.raises(ValueError):
        synthesize(parse_pair("(1, 0)"), GF(3))
