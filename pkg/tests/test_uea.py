from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from padicrep.errors import DomainError, ParseError
from padicrep.uea import (GENERATORS, PBWElement, _MATRICES, ad_identity_check, bracket,
                          casimir, decompose, format_pbw, matrix_bracket, parse_pbw,
                          principal_anti, spanning_monomials)

G = {g: PBWElement.gen(g) for g in GENERATORS}


def from_matrix(m):
    return sum((PBWElement.gen(g) * q for g, q in decompose(m).items()), PBWElement())


@pytest.mark.parametrize("i,j", list(product(range(4), repeat=2)))
def test_structure_constants_match_matrices(i, j):
    x, y = PBWElement.gen(i), PBWElement.gen(j)
    assert bracket(x, y) == from_matrix(matrix_bracket(_MATRICES[i], _MATRICES[j]))


def test_named_brackets():
    assert bracket(G["up"], G["um"]) == -G["h"]
    assert bracket(G["h"], G["up"]) == -2 * G["up"]
    assert bracket(G["h"], G["um"]) == 2 * G["um"]
    assert all(bracket(G["e"], x).is_zero() for x in G.values())


def test_jacobi_on_generators():
    for x, y, z in product(G.values(), repeat=3):
        jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert jac.is_zero()


monomial = st.tuples(*[st.integers(0, 2)] * 4).map(lambda m: PBWElement({m: 1}))
element = st.lists(st.tuples(st.tuples(*[st.integers(0, 2)] * 4), st.integers(-3, 3)),
                   max_size=3).map(lambda ts: PBWElement(dict(ts)))


@given(element, element, element)
def test_jacobi_random(x, y, z):
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert jac.is_zero()


@given(element, element, element)
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


def test_casimir_central_through_degree_four():
    c = casimir()
    for m in spanning_monomials(4):
        assert bracket(c, m).is_zero()


@pytest.mark.parametrize("m", [0, -1, -2, -3])
def test_ad_identity(m):
    assert ad_identity_check(m).is_zero()


def test_ad_identity_domain():
    with pytest.raises(DomainError):
        ad_identity_check(1)


def test_normal_ordering_example():
    x = G["um"] * G["um"] * G["up"]
    assert format_pbw(x) == "-2 um + 2 h um + 1 up um^2"


def test_parse_multiplies_in_written_order():
    assert parse_pbw("1 um up") == G["up"] * G["um"] + G["h"]
    assert parse_pbw("0").is_zero()
    assert parse_pbw("- 1/2 h^2 + 3 e") == Fraction(-1, 2) * G["h"] ** 2 + 3 * G["e"]
    for bad in ("", "1 x", "up", "1 up +"):
        with pytest.raises(ParseError):
            parse_pbw(bad)


@given(element)
def test_print_parse_round_trip(x):
    assert parse_pbw(format_pbw(x)) == x


@given(element, element)
def test_principal_anti_reverses_products(x, y):
    assert principal_anti(x * y) == principal_anti(y) * principal_anti(x)
    assert principal_anti(principal_anti(x)) == x
