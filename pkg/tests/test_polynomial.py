from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indpoly.polynomial import (
    DegreeUndefinedError,
    GammaDecomposition,
    IntPolynomial,
    NotSymmetricError,
    gamma_compose,
    gamma_expand,
    is_symmetric,
    is_unimodal_symmetric,
    poly_arith,
    render,
)

P = IntPolynomial
coeffs = st.lists(st.integers(-50, 50), max_size=12)
polys = coeffs.map(IntPolynomial)

R19 = P([1, 19, 153, 701, 2058, 4112, 5772, 5772, 4112, 2058, 701, 153, 19, 1])
R19_DEL = P([1, 18, 139, 616, 1763, 3462, 4817, 4817, 3462, 1763, 616, 139, 18, 1])


def test_arith_examples():
    assert poly_arith(P([1, 2, 1]), P([1, 1]), "mul") == P([1, 3, 3, 1])
    assert poly_arith(P([1, 3, 1]), P([1, 2, 1]), "sub") == P([0, 1])
    assert poly_arith(P([1, 2]), P([]), "mul").is_zero()
    with pytest.raises(ValueError):
        poly_arith(P([1]), P([1]), "div")


def test_trailing_zeros_trimmed():
    assert P([1, 2, 0, 0]) == P([1, 2])
    assert P([0, 0]).is_zero()
    assert P([1, 2, 0]).degree == 1


def test_zero_degree_undefined():
    with pytest.raises(DegreeUndefinedError):
        P([]).degree


@pytest.mark.parametrize(
    "p, expected",
    [(P([1, 3, 1]), True), (P([1, 2]), False), (P([7]), True), (R19, True), (P([0, 1]), False)],
)
def test_is_symmetric(p, expected):
    assert is_symmetric(p) is expected


@pytest.mark.parametrize(
    "p, expected",
    [(P([1, 8, 21, 21, 8, 1]), True), (P([2, 1, 2]), False), (P([1, 3, 1]), True), (P([5]), True)],
)
def test_is_unimodal_symmetric(p, expected):
    assert is_unimodal_symmetric(p) is expected


def test_unimodal_requires_symmetry():
    with pytest.raises(NotSymmetricError):
        is_unimodal_symmetric(P([1, 2]))


@pytest.mark.parametrize(
    "p, d, gammas",
    [
        (P([1, 3, 1]), 2, (1, 1)),
        (P([1, 4, 6, 4, 1]), 4, (1, 0, 0)),
        (P([1, 1, 1]), 2, (1, -1)),
        (R19, 13, (1, 6, 9, 4, 1, 0, 0)),
    ],
)
def test_gamma_expand(p, d, gammas):
    g = gamma_expand(p)
    assert (g.d, tuple(g.gammas)) == (d, gammas)
    assert gamma_compose(g) == p


def test_gamma_expand_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        gamma_expand(P([1, 2]))


def test_gamma_compose_examples():
    assert gamma_compose(GammaDecomposition(2, (1, 1))) == P([1, 3, 1])
    assert gamma_compose(GammaDecomposition(0, (1,))) == P([1])
    assert gamma_compose(GammaDecomposition(13, (1, 5, 6, 1, 0, 0, 0))) == R19_DEL


def test_gamma_decomposition_length_checked():
    with pytest.raises(ValueError):
        GammaDecomposition(4, (1, 2))


def test_render():
    assert render(P([1, 3, 1])) == "1 + 3x + x^2"
    assert render(P([0, 1]), "y") == "y"
    assert render(P([])) == "0"
    assert render(P([1, -2, 0, 4])) == "1 - 2x + 4x^3"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(polys, st.integers(-5, 5))
def test_evaluation_is_homomorphic(a, x):
    b = P([2, -1, 3])
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=10).filter(lambda c: c[0] != 0))
def test_symmetry_matches_reversal(half):
    p = P(half + half[::-1][1:])
    d = p.degree
    rev = [p[d - i] for i in range(d + 1)]
    assert is_symmetric(p) == (rev == list(p.coeffs))
    q = P(half + [half[0] + 1] + half[::-1])
    assert is_symmetric(q) == (q.coeffs == q.coeffs[::-1])


@settings(max_examples=200)
@given(st.integers(0, 20).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-40, 40), min_size=d // 2, max_size=d // 2), st.integers(1, 40))))
def test_gamma_round_trip(args):
    d, rest, g0 = args
    g = GammaDecomposition(d, (g0, *rest))
    h = gamma_compose(g)
    assert h.degree == d and is_symmetric(h)
    assert gamma_expand(h) == g


@given(st.integers(0, 20).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(0, 40), min_size=d // 2, max_size=d // 2), st.integers(1, 40))))
def test_gamma_positive_implies_unimodal(args):
    d, rest, g0 = args
    h = gamma_compose(GammaDecomposition(d, (g0, *rest)))
    assert is_symmetric(h) and is_unimodal_symmetric(h)
