import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cleanring import (
    boolean_ring,
    direct_product,
    element_profile,
    make_poly_quotient,
    make_zn,
    matrix_ring,
    ring_census,
)
from cleanring.classify import (
    basic_sets,
    decompose,
    flag_mask,
    integer_polynomial,
    parse_central_polynomial,
)
from cleanring.star import identity_involution, swap_involution


def test_z6_basic_sets():
    b = basic_sets(make_zn(6))
    assert b.units == {1, 5}
    assert b.idempotents == {0, 1, 3, 4}
    assert b.regulars == set(range(6))
    assert b.nilpotents == {0}
    assert b.central == set(range(6))
    assert b.jacobson == {0}


def test_z6_witnesses_are_lowest_pairs():
    z6 = make_zn(6)
    want = {0: (5, 1), 1: (1, 0), 2: (1, 1), 3: (5, 4), 4: (1, 3), 5: (1, 4)}
    for x, pair in want.items():
        assert element_profile(z6, x).witnesses["clean"] == pair
    assert element_profile(z6, 3).witnesses["r_clean"] == (0, 3)


def test_r_clean_alternatives_are_valid_but_not_chosen():
    z6 = make_zn(6)
    b = basic_sets(z6)
    # 3 = 3 + 0 is also an r-clean decomposition, but (0, 3) is lower
    assert 3 in b.regulars and 0 in b.idempotents
    assert element_profile(z6, 3).witnesses["r_clean"] < (3, 0)


def test_exchange_examples():
    z6 = make_zn(6)
    e, branch = element_profile(z6, 2).witnesses["exchange"]
    assert (e, branch) == (0, "1-x")
    # e = 4 works as well: 4 = 2*2 and 1 - 4 = 3 = 3*(1-2)
    assert z6.mul[2, 2] == 4 and z6.mul[3, z6.sub[1, 2]] == z6.sub[1, 4]
    z4 = make_zn(4)
    assert element_profile(z4, 3).witnesses["exchange"] == (1, "1-x")
    assert ring_census(z4)["is_exchange"]


def test_sasr1_on_z3():
    z3 = make_zn(3)
    inv = identity_involution(z3)
    w = [element_profile(z3, x, inv).witnesses["sasr1_decomp"] for x in range(3)]
    assert w == [(1, 2), (2, 2), (1, 1)]
    # 0 = 2 + 1 is the other decomposition of zero
    assert z3.add[2, 1] == 0


def test_idempotent_polynomial_roots():
    z6 = make_zn(6)
    g = integer_polynomial(z6, [0, -1, 1], "x^2-x")
    assert g.roots() == basic_sets(z6).idempotents
    # with g = x^2 - x the g-notions collapse to the plain ones
    assert np.array_equal(flag_mask(z6, "g_clean", None, g), flag_mask(z6, "clean"))
    assert np.array_equal(flag_mask(z6, "g_r_clean", None, g), flag_mask(z6, "r_clean"))
    cubic = parse_central_polynomial(z6, "x^3-x")
    assert cubic.roots() == frozenset(range(6))


def test_matrix_census():
    m = matrix_ring(make_zn(2), 2)
    c = ring_census(m)
    assert c.counts == {"U": 6, "Idem": 8, "Reg": 16, "Nil": 4, "J": 1, "C": 2}
    assert not c["commutative"] and not c["abelian"]
    assert c["is_clean"] and c["is_exchange"] and c["is_r_clean"]
    assert c.witness("is_clean") is None


def test_census_witness_is_least_failure():
    b = boolean_ring(2)
    c = ring_census(b, swap_involution(b))
    assert c["is_weakly_clean"] and not c["is_weakly_star_clean"]
    assert b.name(c.witness("is_weakly_star_clean")) == "(1,0)"
    assert c.failures["is_weakly_star_clean"] == (b.element("(1,0)"), b.element("(0,1)"))


def test_decompose_empty_second():
    z5 = make_zn(5)
    a, b = decompose(z5, np.ones(5, dtype=bool), [])
    assert (a == -1).all() and (b == -1).all()


def test_units_and_nilpotents_disjoint_on_local_rings():
    for ring in (make_zn(8), make_zn(9), make_poly_quotient(2, "x^2"), make_poly_quotient(3, "x^2")):
        b = basic_sets(ring)
        assert b.units | b.nilpotents == set(ring.elements)
        assert b.jacobson == b.nilpotents
        assert b.idempotents == {ring.zero, ring.one}


def _weak_types(ring, flag, x):
    p = element_profile(ring, x)
    return p.flags[f"{flag}_t1"], p.flags[f"{flag}_t2"]


@pytest.mark.parametrize("left,right", [(5, 8), (4, 9), (6, 6), (3, 8)])
def test_product_bookkeeping(left, right):
    a, b = make_zn(left), make_zn(right)
    prod = direct_product([a, b])
    for x in prod.elements:
        i, j = (int(c) for c in prod.meta["coords"][x])
        px = element_profile(prod, x)
        for flag in ("unit", "idempotent", "regular", "nilpotent", "clean", "r_clean", "exchange"):
            assert px.flags[flag] == (element_profile(a, i).flags[flag] and element_profile(b, j).flags[flag])
        # a weak decomposition in a product must use the same sign in every coordinate
        for flag in ("weakly_clean", "weakly_r_clean"):
            ta, tb = _weak_types(a, flag, i), _weak_types(b, flag, j)
            assert px.flags[flag] == ((ta[0] and tb[0]) or (ta[1] and tb[1]))


def test_weak_notion_strictly_larger_than_type_one_somewhere():
    # in Z3 x Z3 with the swap, (1,0) is only weakly *-clean through 1 - x
    p = direct_product([make_zn(3), make_zn(3)])
    inv = swap_involution(p)
    weak = flag_mask(p, "weakly_star_clean", inv)
    t1 = flag_mask(p, "weakly_star_clean_t1", inv)
    assert (t1 <= weak).all()
    assert {p.name(x) for x in np.flatnonzero(weak & ~t1)} == {"(1,0)", "(0,1)"}
    assert weak.all()
    assert np.array_equal(t1, flag_mask(p, "star_clean", inv))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=60))
def test_zn_witnesses_reverify(n):
    ring = make_zn(n)
    b = basic_sets(ring)
    for x in ring.elements:
        p = element_profile(ring, x)
        u, e = p.witnesses["clean"]
        assert u in b.units and e in b.idempotents and (u + e) % n == x
        r, f = p.witnesses["r_clean"]
        assert r in b.regulars and f in b.idempotents and (r + f) % n == x
        if p.flags["regular"]:
            y, = p.witnesses["regular"]
            assert (x * y * x) % n == x
