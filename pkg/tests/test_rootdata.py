from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from principal_sl2.errors import InvalidType, NotClosed, WeylGroupTooLarge
from principal_sl2.rootdata import (CartanType, DynkinType, Weight, WeylElement, apply, build,
                                    dual, dynkin_type_of, exponents, find_in_orbit_mod, pairing,
                                    reflect, subsystem, weyl_group_elements, weyl_orbit,
                                    weyl_orbit_mod)

ALL_TYPES = ([f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)]
             + [f"C{n}" for n in range(2, 9)] + [f"D{n}" for n in range(4, 9)]
             + ["E6", "E7", "E8", "F4", "G2"])
SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]

DIMENSIONS = {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}


def group_dimension(t):
    ct = CartanType.parse(t)
    n = ct.rank
    if ct.family == "A":
        return n * (n + 2)
    if ct.family in "BC":
        return n * (2 * n + 1)
    if ct.family == "D":
        return n * (2 * n - 1)
    return DIMENSIONS[t]


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9),
                                 ("F", 3), ("G", 3), ("H", 3)])
def test_invalid_types(bad):
    with pytest.raises(InvalidType):
        CartanType(*bad)


def test_parse():
    assert CartanType.parse("e_8") == CartanType("E", 8)
    with pytest.raises(InvalidType):
        CartanType.parse("SL3")


@pytest.mark.parametrize("t", ALL_TYPES)
def test_basic_invariants(t):
    d = build(t)
    assert 2 * d.num_positive == group_dimension(t) - d.rank
    assert sum(d.marks) == d.coxeter_number
    assert d.highest_root == d.marks[1:]
    assert sum(d.highest_root) == d.coxeter_number - 1
    for k, r in enumerate(d.positive_roots):
        # <alpha, alpha^v> = 2 and the heights are pairings with rho^v
        assert d.root_pair_coroot(r, k) == 2
        assert d.pairing(d.rho, k) == d.coheights[k] > 0
        assert sum(a * b for a, b in zip(d.root_to_weight(r), d.two_rho_dual)) == 2 * d.heights[k]


@pytest.mark.parametrize("t", ALL_TYPES)
def test_height_partition_is_conjugate_to_exponents(t):
    d = build(t)
    exps = exponents(d.cartan_type)
    for hs in (d.heights, d.coheights):
        counts = [sum(1 for x in hs if x == k) for k in range(1, max(hs) + 1)]
        conjugate = [sum(1 for e in exps if e >= k) for k in range(1, max(exps) + 1)]
        assert counts == conjugate


def test_g2_roots_and_coroots():
    d = build("G2")
    assert d.positive_roots == ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
    assert d.positive_coroots == ((1, 0), (0, 1), (1, 3), (2, 3), (1, 1), (1, 2))
    assert sorted(d.heights) == [1, 1, 2, 3, 4, 5]
    assert d.coheights == (1, 1, 4, 5, 2, 3)
    assert d.pairing(d.rho, 3) == 5


def test_small_examples():
    assert build("A1").positive_roots == ((1,),)
    e8 = build("E8")
    assert e8.num_positive == 120
    a2 = build("A2")
    top = a2.positive_coroots.index((1, 1))
    assert pairing(a2, a2.rho, top) == 2


@pytest.mark.parametrize("t", ["B3", "C4", "F4", "G2", "D5", "E6"])
def test_dual_is_an_involution(t):
    d = build(t)
    dd = dual(dual(d))
    assert dd.positive_roots == d.positive_roots
    assert dd.positive_coroots == d.positive_coroots
    assert dd.cartan_matrix == d.cartan_matrix
    assert dual(d).cartan_matrix == tuple(zip(*d.cartan_matrix))


def test_dual_family_names():
    assert dual(build("B3")).cartan_type == CartanType("C", 3)
    assert dual(build("F4")).marks == (1, 2, 4, 3, 2)


@pytest.mark.parametrize("t", ALL_TYPES)
def test_omega_generators_are_diagram_symmetries(t):
    d = build(t)
    ec = d.extended_cartan
    n = d.rank + 1
    for g in d.omega_generators:
        assert sorted(g) == list(range(n))
        assert all(ec[g[i]][g[j]] == ec[i][j] for i in range(n) for j in range(n))
        assert all(d.marks[g[i]] == d.marks[i] for i in range(n))


def _det(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@pytest.mark.parametrize("t", ALL_TYPES)
def test_omega_order_is_index_of_root_lattice(t):
    from principal_sl2.kacsearch import omega_group
    d = build(t)
    assert len(omega_group(d.cartan_type)) == _det(d.cartan_matrix)


def test_reflections():
    d = build("B3")
    for i in range(3):
        alpha = d.cartan_matrix[i]
        assert d.reflect(d.rho.coords, i) == tuple(r - a for r, a in zip(d.rho.coords, alpha))
    a1 = build("A1")
    assert apply(a1, WeylElement((0,)), Weight((5,))) == Weight((-5,))
    assert len(weyl_orbit(build("A2"), build("A2").rho)) == 6
    assert reflect(a1, Weight((3,)), 0) == Weight((-3,))


@settings(max_examples=60, deadline=None)
@given(t=st.sampled_from(SMALL_TYPES), data=st.data())
def test_reflection_involution_and_word_inverse(t, data):
    d = build(t)
    coords = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=d.rank, max_size=d.rank)))
    word = tuple(data.draw(st.lists(st.integers(0, d.rank - 1), max_size=8)))
    for i in range(d.rank):
        assert d.reflect(d.reflect(coords, i), i) == coords
    w = WeylElement(word)
    assert d.apply_word(w.inverse().word, d.apply_word(word, coords)) == coords
    assert w.det == (-1) ** len(word)
    # the W-invariant form is preserved
    x = d.weight_to_root(coords)
    y = d.weight_to_root(d.apply_word(word, coords))
    G = d.gram
    q = lambda v: sum(v[i] * G[i][j] * v[j] for i in range(d.rank) for j in range(d.rank))
    assert q(x) == q(y)


def test_weyl_orbit_mod():
    a1 = build("A1")
    orb = weyl_orbit_mod(a1, Weight((1,)), 2)
    assert set(orb) == {(1,)}
    assert len(weyl_orbit_mod(build("B3"), Weight((1, 2, 3)), 1)) == 1
    g2 = build("G2")
    brute = {tuple(x % 2 for x in g2.apply_word(w.word, (1, 1))) for w in weyl_group_elements(g2)}
    assert set(weyl_orbit_mod(g2, g2.rho, 2)) == brute
    for x, w in weyl_orbit_mod(g2, g2.rho, 2).items():
        assert tuple(c % 2 for c in g2.apply_word(w.word, (1, 1))) == x
    u = find_in_orbit_mod(g2, Weight((1, 2)), 3, (1, 1))
    assert u is None or tuple(c % 3 for c in g2.apply_word(u.word, (1, 2))) == (1, 1)


def test_weyl_group_cap():
    with pytest.raises(WeylGroupTooLarge):
        weyl_orbit_mod(build("E8"), Weight((1,) * 8), 2)
    assert len(weyl_group_elements(build("B3"))) == 48


def test_subsystem_examples():
    g2 = build("G2")
    sel = [k for k, c in enumerate(g2.coheights) if c % 2 == 0]
    assert sel == [2, 4]
    desc = subsystem(dual(g2), sel)
    assert desc.dynkin == DynkinType.parse("2A1")
    full = subsystem(g2, range(g2.num_positive))
    assert full.simple == (0, 1)
    assert full.two_rho == tuple(sum(r[j] for r in g2.positive_roots) for j in range(2))
    with pytest.raises(NotClosed):
        subsystem(build("A2"), [0, 1])


def test_e6_height_four_subsystem():
    # roots of height divisible by 4: three components, types 2A2 + A1
    e6 = build("E6")
    sel = [k for k, h in enumerate(e6.heights) if h % 4 == 0]
    assert subsystem(e6, sel).dynkin == DynkinType.parse("2A2+A1")


@pytest.mark.parametrize("t", ALL_TYPES)
def test_height_congruence_sets_are_closed(t):
    d = build(t)
    for m in range(1, d.coxeter_number + 1):
        sel = [k for k, h in enumerate(d.heights) if h % m == 0]
        subsystem(d, sel)


@pytest.mark.parametrize("t", ALL_TYPES)
def test_dynkin_type_of_full_system(t):
    d = build(t)
    simple = [tuple(1 if j == i else 0 for j in range(d.rank)) for i in range(d.rank)]
    fam = "B" if str(d.cartan_type) == "C2" else d.cartan_type.family  # C2 is reported as B2
    assert dynkin_type_of(d, simple) == DynkinType.from_components([(fam, d.rank)])


def test_d3_is_recognised_as_a3():
    d = build("D3")
    simple = [tuple(1 if j == i else 0 for j in range(3)) for i in range(3)]
    assert dynkin_type_of(d, simple) == DynkinType.parse("A3")


def test_dynkin_type_strings():
    t = DynkinType.parse("A1+C3")
    assert str(t) == "C3+A1"
    assert DynkinType.parse("2A2+A1").root_count == 14
    assert str(DynkinType(())) == "none"


@settings(max_examples=80, deadline=None)
@given(t=st.sampled_from(SMALL_TYPES + ["E6", "E7", "D5"]), data=st.data())
def test_root_lattice_membership_agrees_with_exact_solve(t, data):
    d = build(t)
    coords = data.draw(st.lists(st.integers(-12, 12), min_size=d.rank, max_size=d.rank))
    scale = data.draw(st.integers(1, 6))
    exact = d.weight_to_root(coords)
    want = all(c.denominator == 1 and c.numerator % scale == 0 for c in exact)
    assert d.in_root_lattice(coords, scale) == want
    # every root lies in the root lattice
    assert all(d.in_root_lattice(d.root_to_weight(r)) for r in d.positive_roots)
