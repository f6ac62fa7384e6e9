from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from principal_sl2.errors import NotACharacter, NotDominant
from principal_sl2.laurent import LaurentPolynomial as L
from principal_sl2.rootdata import Weight, build, exponents
from principal_sl2.sl2restrict import (Sl2Decomposition, adjoint_factorized, decompose_sl2,
                                       dimension, highest_root_weight, principal_character,
                                       restriction_fingerprint, sl2_string)

ADJOINT_TYPES = ([f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)]
                 + [f"C{n}" for n in range(2, 9)] + [f"D{n}" for n in range(4, 9)]
                 + ["E6", "E7", "E8", "F4", "G2"])


def test_examples():
    assert principal_character(build("A1"), Weight((2,))) == L.from_terms({-2: 1, 0: 1, 2: 1})
    assert principal_character(build("E7"), Weight((0,) * 7)) == L.constant(1)
    b2 = principal_character(build("B2"), Weight((1, 0)))
    assert b2 == L.from_terms({e: 1 for e in (-4, -2, 0, 2, 4)})
    assert dimension(build("G2"), Weight((1, 0))) == 7
    assert principal_character(build("G2"), Weight((1, 0))).value_at_one() == 7
    assert dimension(build("A2"), Weight((1, 1))) == 8
    assert dimension(build("F4"), Weight((0, 0, 0, 0))) == 1
    with pytest.raises(NotDominant):
        principal_character(build("A2"), Weight((1, -1)))


def test_decompose_examples():
    assert decompose_sl2(L.from_terms({-2: 1, 0: 1, 2: 1})).multiplicities == {3: 1}
    a2 = principal_character(build("A2"), Weight((1, 1)))
    assert decompose_sl2(a2).multiplicities == {3: 1, 5: 1}
    assert decompose_sl2(L.constant(2)).multiplicities == {1: 2}
    with pytest.raises(NotACharacter):
        decompose_sl2(L.from_terms({-2: 1, 2: 1}))
    with pytest.raises(NotACharacter):
        decompose_sl2(L.from_terms({-1: 1, 0: 1}))


@pytest.mark.parametrize("t", ADJOINT_TYPES)
def test_adjoint_closed_forms_and_string_count(t):
    d = build(t)
    theta = principal_character(d, highest_root_weight(d))
    assert theta == adjoint_factorized(d)
    dec = decompose_sl2(theta)
    assert dec.string_count == d.rank
    tops = sorted(k - 1 for k, c in dec.multiplicities.items() for _ in range(c))
    assert tops == [2 * e for e in exponents(d.cartan_type)]


def test_d4_closed_form_row():
    from principal_sl2.laurent import exact_div, product
    num = product([L.one_minus(8), L.one_minus(4, sign=1), L.one_minus(14)])
    den = product([L.one_minus(2), L.one_minus(4)])
    assert adjoint_factorized(build("D4")) == exact_div(num, den).shift(-10)


def test_fingerprints():
    a5 = build("A5")
    lam, mu = Weight((0, 0, 3, 1, 2)), Weight((0, 4, 0, 1, 1))
    assert restriction_fingerprint(a5, lam) == restriction_fingerprint(a5, mu)
    assert restriction_fingerprint(a5, lam) == restriction_fingerprint(a5, Weight((2, 1, 3, 0, 0)))
    a2 = build("A2")
    assert restriction_fingerprint(a2, Weight((1, 0))) != restriction_fingerprint(a2, Weight((2, 0)))


def _diagram_automorphisms(t):
    d = build(t)
    n = d.rank
    A = d.cartan_matrix
    return [p for p in permutations(range(n))
            if all(A[p[i]][p[j]] == A[i][j] for i in range(n) for j in range(n))]


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"])
def test_fingerprint_injective_up_to_diagram_automorphism(t):
    d = build(t)
    autos = _diagram_automorphisms(t)
    seen = {}
    for coords in product(range(5), repeat=d.rank):
        key = min(tuple(coords[p[i]] for i in range(d.rank)) for p in autos)
        fp = restriction_fingerprint(d, Weight(coords))
        assert seen.setdefault(fp, key) == key, f"{coords} collides with {seen[fp]}"


@settings(max_examples=80, deadline=None)
@given(t=st.sampled_from(["A3", "B3", "C3", "G2", "D4", "F4", "A5"]), data=st.data())
def test_character_properties(t, data):
    d = build(t)
    lam = Weight(tuple(data.draw(st.lists(st.integers(0, 4), min_size=d.rank, max_size=d.rank))))
    theta = principal_character(d, lam)
    assert theta.is_palindromic()
    assert all(c > 0 for c in theta.coeffs if c) and min(theta.coeffs) >= 0
    assert theta.value_at_one() == dimension(d, lam)
    dec = decompose_sl2(theta)
    assert dec.to_laurent() == theta
    assert dec.dimension == dimension(d, lam)


def test_sl2_string():
    assert sl2_string(4) == L.from_terms({-3: 1, -1: 1, 1: 1, 3: 1})
    assert Sl2Decomposition({1: 2, 3: 1}).to_laurent() == L.from_terms({-2: 1, 0: 3, 2: 1})
