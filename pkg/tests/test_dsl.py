import numpy as np
import pytest

from cleanring.dsl import ARITY, build_spec, canonical, parse_ring_spec
from cleanring.errors import ArityError, NonMonic, ParseError, UnknownConstructor


@pytest.mark.parametrize("text,size", [
    ("Zn(6)", 6),
    ("M(Zn(2),2)", 16),
    ("tri(Zn(3))", 27),
    ('polyq(2,"x^2+x+1")', 4),
    ('trunc(polyq(2,"x^2+x+1"),frobenius,2)', 16),
    ('corner(M(Zn(2),2),"[[1,0],[0,0]]")', 2),
    ("center(M(Zn(2),2))", 2),
    ("quot(Zn(12),4)", 4),
    ("product(Zn(2),Zn(3),Zn(5))", 30),
])
def test_examples_build(text, size):
    built = build_spec(text)
    assert built.ring.size == size
    assert built.involution is None


def test_star_spec():
    built = build_spec("star(product(Zn(2),Zn(2)),swap)")
    assert built.involution.name == "swap"
    assert built.provenance == "star(product(Zn(2),Zn(2)),swap)"
    quoted = build_spec('star(product(polyq(2,"x^2+x+1"),polyq(2,"x^2+x+1")),"componentwise(frobenius,id)")')
    bare = build_spec('star(product(polyq(2,"x^2+x+1"),polyq(2,"x^2+x+1")),componentwise(frobenius,id))')
    assert quoted.involution.same_table(bare.involution)


def test_normal_forms():
    assert canonical("quot(Zn(12),4)") == 'quot(Zn(12),"4")'
    assert canonical("trunc(Zn(3),endo:0,2)") == "trunc(Zn(3),id,2)"
    assert canonical(" Zn( 6 ) ") == "Zn(6)"


@pytest.mark.parametrize("text,error,line,column", [
    ("Zn(6", ParseError, 1, 5),
    ("Foo(2)", UnknownConstructor, 1, 1),
    ("Zn(2,3)", ArityError, 1, 1),
    ("product(star(Zn(2),id),Zn(2))", ParseError, 1, 9),
    ("Zn(x)", ParseError, 1, 4),
    ("product(Zn(2),\n  Bar(3))", UnknownConstructor, 2, 3),
    ("Zn(6) junk", ParseError, 1, 7),
    ("star(Zn(5),transpose)", ParseError, 1, 12),
])
def test_errors_carry_position(text, error, line, column):
    with pytest.raises(error) as info:
        build_spec(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_parse_is_lazy():
    # syntax is checked up front; the constructor error surfaces on build
    plan = parse_ring_spec('polyq(4,"2x^2+1")')
    with pytest.raises(NonMonic):
        plan.build()


def test_arity_table_covers_grammar():
    assert set(ARITY) == {"Zn", "polyq", "product", "M", "tri", "trunc", "corner", "quot", "center", "star"}


def test_corpus_provenance_round_trip(corpus):
    for entry in corpus:
        rebuilt = build_spec(entry.provenance).ring
        assert rebuilt.provenance == entry.provenance
        assert np.array_equal(rebuilt.add, entry.ring.add)
        assert np.array_equal(rebuilt.mul, entry.ring.mul)
        for inv in entry.involutions:
            again = build_spec(inv.provenance)
            assert again.involution.same_table(inv), inv.provenance
