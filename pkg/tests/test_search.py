import pytest

from cleanring.errors import UnknownFlag
from cleanring.search import (
    CORPUS_POLYNOMIALS,
    Caps,
    Witness,
    corpus_entry,
    corpus_generate,
    find_witness,
    parse_query,
    reverify,
)


def test_caps_validation():
    with pytest.raises(ValueError):
        Caps(size=0)
    with pytest.raises(ValueError):
        Caps(involutions=-1)


def test_corpus_is_deterministic():
    caps = Caps(size=32, zn=16, product=32, involutions=16)
    a = corpus_generate(caps)
    b = corpus_generate(caps)
    assert [e.provenance for e in a] == [e.provenance for e in b]
    assert [[i.name for i in e.involutions] for e in a] == [[i.name for i in e.involutions] for e in b]


def test_caps_only_shrink(corpus):
    small = corpus_generate(Caps(size=8))
    names = {e.provenance for e in small}
    assert names <= {e.provenance for e in corpus}
    assert all(e.ring.size <= 8 for e in small)
    assert "M(Zn(3),2)" not in names and "M(Zn(2),2)" not in names
    assert "M(Zn(3),2)" in {e.provenance for e in corpus}


def test_default_corpus_shape(corpus):
    names = [e.provenance for e in corpus]
    assert len(names) == len(set(names))
    assert all(e.ring.size <= 256 for e in corpus)
    for e in corpus:
        assert [g.text for g in e.polynomials] == list(CORPUS_POLYNOMIALS)
        tables = [tuple(i.star.tolist()) for i in e.involutions]
        assert len(tables) == len(set(tables))


def test_boolean_rings_carry_every_involution(corpus):
    want = {"Zn(2)": 1, "product(Zn(2),Zn(2))": 2, "product(Zn(2),Zn(2),Zn(2))": 4,
            "product(Zn(2),Zn(2),Zn(2),Zn(2))": 10}
    for name, count in want.items():
        assert len(corpus_entry(corpus, name).involutions) == count
    with pytest.raises(KeyError):
        corpus_entry(corpus, "Zn(1000)")


def test_parse_query():
    q = parse_query("element: idempotent & !central")
    assert q.element and q.terms == (("idempotent", True), ("central", False))
    q = parse_query("is_weakly_clean ∧ ¬is_weakly_star_clean")
    assert not q.element and q.needs_star and not q.needs_g
    assert parse_query("is_weakly_g_r_clean && !is_g_r_clean").needs_g
    assert parse_query("!!is_clean").terms == (("is_clean", True),)


@pytest.mark.parametrize("text", [
    "", "is_clean &", "& is_clean", "is_clean is_r_clean", "is_nonsense",
    "element: is_clean", "idempotent", "is_clean !", "is_clean | is_r_clean",
])
def test_bad_queries(text):
    with pytest.raises(UnknownFlag):
        parse_query(text)


def test_noncentral_idempotents(corpus):
    result = find_witness("element: idempotent & !central", corpus)
    first = result.witnesses[0]
    assert first.ring == "M(Zn(2),2)" and first.element_name == "[[1,0],[0,0]]"
    assert {w.ring for w in result.witnesses} >= {"M(Zn(2),2)", "M(Zn(3),2)", "tri(Zn(2))"}
    assert all(reverify(w, result.query, corpus) for w in result.witnesses)


def test_weakly_clean_not_weakly_star_clean(corpus):
    result = find_witness("is_weakly_clean ∧ ¬is_weakly_star_clean", corpus)
    labels = [w.label() for w in result.witnesses]
    assert "product(Zn(2),Zn(2)) star=swap" in labels
    assert result.scanned_pairs == sum(len(e.involutions) for e in corpus)
    assert all(reverify(w, result.query, corpus) for w in result.witnesses)


def test_clean_type_notions_do_not_separate(corpus):
    for q in ("!is_clean", "!is_weakly_clean", "is_weakly_r_clean & !is_r_clean", "!is_exchange"):
        assert len(find_witness(q, corpus)) == 0, q


def test_star_and_polynomial_separations_exist(corpus):
    assert len(find_witness("!is_weakly_star_clean", corpus)) > 0
    assert len(find_witness("is_weakly_star_clean & !is_star_clean", corpus)) > 0
    result = find_witness("is_weakly_g_r_clean & !is_g_r_clean", corpus)
    assert result.witnesses[0] == Witness("Zn(4)", None, "x-1")


def test_scope_and_reverify_rejects(corpus):
    result = find_witness(parse_query("element: unit & !central", scope="M(Zn(3),2)"), corpus)
    assert result.scanned_rings == 1
    assert {w.ring for w in result.witnesses} == {"M(Zn(3),2)"}
    w = result.witnesses[0]
    assert not reverify(w, "element: unit & central", corpus)


def test_idempotents_that_are_not_projections(corpus):
    q = parse_query("element: idempotent ∧ ¬projection", scope="product(Zn(3),Zn(3))")
    result = find_witness(q, corpus)
    assert [(w.star, w.element_name) for w in result.witnesses] == [("swap", "(1,0)"), ("swap", "(0,1)")]
