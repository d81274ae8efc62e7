import numpy as np
import pytest

from cleanring import (
    basic_sets,
    boolean_ring,
    direct_product,
    make_poly_quotient,
    make_zn,
    matrix_ring,
    ring_census,
    triangular_ring,
    truncated_skew_series,
)
from cleanring.errors import BadEndomorphism, CapExceeded, NonMonic, ParseError
from cleanring.ring import ring_violations
from cleanring.structure import frobenius_map, identity_map


def test_zn_rejects_small_n():
    with pytest.raises(ValueError):
        make_zn(1)


def test_z4_sets():
    s = basic_sets(make_zn(4))
    assert s.idempotents == {0, 1}
    assert s.units == {1, 3}
    assert s.regulars == {0, 1, 3}


def test_dual_numbers_over_z2():
    ring = make_poly_quotient(2, "x^2")
    assert list(ring.names) == ["0", "1", "x", "1+x"]
    assert basic_sets(ring).nilpotents == {0, 2}


def test_f4_is_a_field():
    f4 = make_poly_quotient(2, "x^2+x+1")
    assert len(basic_sets(f4).units) == 3


def test_degree_one_quotient_collapses_to_zn():
    ring = make_poly_quotient(3, "x^1")
    assert ring.size == 3
    assert ring.same_tables(make_zn(3))


def test_polyq_errors():
    with pytest.raises(NonMonic):
        make_poly_quotient(3, "2x^2+1")
    with pytest.raises(NonMonic):
        make_poly_quotient(2, "2x^2+1")  # leading coefficient vanishes mod 2
    with pytest.raises(ParseError):
        make_poly_quotient(3, "x^^2")
    with pytest.raises(CapExceeded):
        make_poly_quotient(3, "x^9")


def test_product_sizes_and_names():
    ring = direct_product([make_zn(2), make_zn(3)])
    assert ring.size == 6
    assert ring.name(1) == "(1,0)"
    assert ring.name(ring.one) == "(1,1)"
    with pytest.raises(ValueError):
        direct_product([make_zn(2)])


def test_z2_times_z3_counts_match_z6():
    a = ring_census(direct_product([make_zn(2), make_zn(3)])).counts
    b = ring_census(make_zn(6)).counts
    assert a == b


@pytest.mark.parametrize("factors", [
    (make_zn(4), make_zn(9)), (make_zn(6), make_poly_quotient(2, "x^2")),
    (matrix_ring(make_zn(2), 2), make_zn(3)),
])
def test_product_counts_multiply(factors):
    whole = ring_census(direct_product(list(factors))).counts
    parts = [ring_census(f).counts for f in factors]
    for key in ("U", "Idem", "Reg", "C"):
        assert whole[key] == np.prod([p[key] for p in parts])


def test_boolean_ring():
    ring = boolean_ring(3)
    assert ring.size == 8
    assert ring_census(ring)["boolean"]


def test_matrix_ring_over_z2():
    ring = matrix_ring(make_zn(2), 2)
    s = basic_sets(ring)
    assert ring.size == 16
    assert len(s.regulars) == 16
    assert len(s.units) == 6
    assert len(s.idempotents) == 8
    assert not ring.is_commutative()
    assert ring.name(ring.one) == "[[1,0],[0,1]]"


def test_one_by_one_matrices():
    assert matrix_ring(make_zn(2), 1).same_tables(make_zn(2))


def test_m2_z3():
    ring = matrix_ring(make_zn(3), 2)
    assert ring.size == 81
    assert ring_census(ring)["two_invertible"]


def test_triangular_ring():
    ring = triangular_ring(make_zn(2))
    assert ring.size == 8
    assert ring.name(ring.one) == "[[1,0],[0,1]]"
    idem = {ring.name(e) for e in basic_sets(ring).idempotents}
    assert {"[[1,0],[0,0]]", "[[1,0],[1,0]]", "[[0,0],[1,1]]"} <= idem
    assert len(idem) == 6


def test_truncated_series_units_have_unit_constant_term():
    for base, length in ((make_zn(2), 3), (make_zn(4), 2), (make_poly_quotient(2, "x^2+x+1"), 2)):
        ring = truncated_skew_series(base, identity_map(base), length)
        coords = ring.meta["coords"]
        base_units = basic_sets(base).units
        assert basic_sets(ring).units == {x for x in ring.elements if coords[x, 0] in base_units}


def test_identity_twist_commutes_with_t():
    base = make_zn(3)
    ring = truncated_skew_series(base, identity_map(base), 2)
    t = ring.element("t")
    assert all(ring.times(t, r) == ring.times(r, t) for r in ring.elements)


def test_frobenius_twist_is_noncommutative_and_local():
    f4 = make_poly_quotient(2, "x^2+x+1")
    ring = truncated_skew_series(f4, frobenius_map(f4), 2)
    assert ring.size == 16
    c = ring_census(ring)
    assert not c["commutative"]
    assert c["trivial_idempotents_only"]
    t, x = ring.element("t"), ring.element("x")
    # t r = alpha(r) t
    assert ring.times(t, x) == ring.times(ring.element("1+x"), t)


def test_bad_twist():
    base = make_zn(2)
    with pytest.raises(BadEndomorphism):
        truncated_skew_series(base, identity_map(make_zn(3)), 2)
    with pytest.raises(BadEndomorphism):
        truncated_skew_series(base, lambda r: r, 2)
    with pytest.raises(CapExceeded):
        truncated_skew_series(base, identity_map(base), 13)


@pytest.mark.parametrize("build", [
    lambda: make_zn(12), lambda: make_poly_quotient(4, "x^2+1"),
    lambda: direct_product([make_zn(2), make_zn(4)]), lambda: matrix_ring(make_zn(2), 2),
    lambda: triangular_ring(make_zn(3)),
    lambda: (lambda b: truncated_skew_series(b, identity_map(b), 3))(make_zn(3)),
])
def test_constructor_output_revalidates(build):
    ring = build()
    assert ring_violations(ring.add, ring.mul, ring.zero, ring.one) == []
