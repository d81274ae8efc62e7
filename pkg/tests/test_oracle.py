"""Engine profiles against the naive oracle in ``oracle.py``."""

import pytest

from cleanring import element_profile, make_zn, direct_product, matrix_ring, make_poly_quotient
from cleanring.classify import G_FLAGS, STAR_FLAGS
from cleanring.star import enumerate_involutions, swap_involution
from cleanring.classify import integer_polynomial

import oracle

BASIC = ("unit", "idempotent", "regular", "nilpotent", "central", "jacobson")


def mismatches(ring, inv=None, g=None):
    """``(element, flag, engine, oracle)`` for every disagreement, flag-for-flag and witness-for-witness."""
    expected = oracle.plain_profiles(ring)
    if inv is not None:
        expected.update(oracle.star_profiles(ring, inv.star))
    if g is not None:
        expected.update(oracle.g_profiles(ring, g.coeffs))
    bad = []
    for x in ring.elements:
        prof = element_profile(ring, x, inv, g)
        for flag, value in prof.flags.items():
            want = expected[flag][x]
            if flag in BASIC or flag in ("projection", "self_adjoint", "g_root"):
                if value != want:
                    bad.append((x, flag, value, want))
                continue
            if value != (want is not None):
                bad.append((x, flag, value, want))
            elif value and prof.witnesses[flag] != tuple(want):
                bad.append((x, flag, prof.witnesses[flag], want))
    return bad


@pytest.mark.parametrize("n", [2, 3, 4, 6, 8, 9, 12])
def test_zn_matches_oracle(n):
    assert mismatches(make_zn(n)) == []


def test_star_and_g_families_match_oracle_on_swap():
    ring = direct_product([make_zn(3), make_zn(3)])
    inv = swap_involution(ring)
    g = integer_polynomial(ring, [0, -1, 0, 1])
    assert mismatches(ring, inv, g) == []


def test_noncommutative_ring_matches_oracle():
    ring = matrix_ring(make_zn(2), 2)
    for inv in enumerate_involutions(ring):
        assert mismatches(ring, inv) == []


def test_oracle_basic_examples():
    b = oracle.basic(oracle.NaiveRing(make_zn(6)))
    assert [x for x in range(6) if b["unit"][x]] == [1, 5]
    assert [x for x in range(6) if b["idempotent"][x]] == [0, 1, 3, 4]
    assert all(b["regular"])
    b = oracle.basic(oracle.NaiveRing(make_poly_quotient(2, "x^2")))
    assert [x for x in range(4) if b["jacobson"][x]] == [0, 2]


def test_all_flag_families_are_covered():
    ring = make_zn(3)
    inv = enumerate_involutions(ring)[0]
    g = integer_polynomial(ring, [0, -1, 1])
    prof = element_profile(ring, 0, inv, g)
    assert set(STAR_FLAGS) <= set(prof.flags)
    assert set(G_FLAGS) <= set(prof.flags)
