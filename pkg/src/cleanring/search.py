"""Desk-scale ring corpus and flat boolean witness queries over it."""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from . import classify
from .classify import integer_polynomial, ring_census
from .constructors import (
    direct_product,
    make_poly_quotient,
    make_zn,
    matrix_ring,
    monic_polynomials,
    triangular_ring,
    truncated_skew_series,
)
from .errors import UnknownFlag
from .star import enumerate_involutions, standard_involutions
from .structure import frobenius_map, identity_map

CORPUS_POLYNOMIALS = ("x^2-x", "x^2+x", "x^3-x", "x-1")
_POLY_INTS = {"x^2-x": [0, -1, 1], "x^2+x": [0, 1, 1], "x^3-x": [0, -1, 0, 1], "x-1": [-1, 1]}


@dataclass(frozen=True)
class Caps:
    """Corpus limits.  ``size`` bounds every ring; ``involutions`` bounds enumeration."""

    size: int = 256
    zn: int = 36
    product: int = 256
    involutions: int = 32

    def __post_init__(self):
        for name in ("size", "zn", "product", "involutions"):
            if getattr(self, name) <= 0:
                raise ValueError(f"cap {name} must be positive")


@dataclass(eq=False)
class CorpusEntry:
    ring: object
    involutions: list = field(default_factory=list)
    polynomials: list = field(default_factory=list)
    tags: tuple = ()

    @property
    def provenance(self):
        return self.ring.provenance


def _attach_involutions(ring, cap):
    found = list(standard_involutions(ring))
    if ring.size <= cap:
        for inv in enumerate_involutions(ring, cap):
            if not any(inv.same_table(other) for other in found):
                found.append(inv)
    return found


def attach_polynomials(ring):
    return [integer_polynomial(ring, _POLY_INTS[text], text) for text in CORPUS_POLYNOMIALS]


def _families(caps):
    """``(tags, builder)`` pairs in corpus order; builders are lazy."""
    zn = {n: make_zn(n) for n in range(2, caps.zn + 1)}
    for n in range(2, caps.zn + 1):
        yield ("zn",), lambda n=n: zn[n]
    for n in (2, 3, 4):
        for degree in (1, 2):
            if n ** degree > caps.size:
                continue
            for f in monic_polynomials(n, degree):
                yield ("polyq",), lambda n=n, f=f: make_poly_quotient(n, f)

    def z(n):
        return zn[n] if n in zn else make_zn(n)

    f4 = make_poly_quotient(2, "x^2+x+1")
    for n in (2, 3):
        if n ** 4 <= caps.size:
            yield ("matrix",), lambda n=n: matrix_ring(z(n), 2)
    for n in (2, 3):
        if n ** 3 <= caps.size:
            yield ("triangular",), lambda n=n: triangular_ring(z(n))
    for base in (z(2), z(3), f4):
        twists = [identity_map(base)]
        phi = frobenius_map(base)
        if not (phi.image == np.arange(base.size)).all():
            twists.append(phi)
        for length in (2, 3):
            if base.size ** length > caps.size:
                continue
            for alpha in twists:
                yield ("trunc",), lambda b=base, a=alpha, k=length: truncated_skew_series(b, a, k)
    pool = [z(2), z(3), z(4), z(5), z(6), z(8), z(9), f4,
            make_poly_quotient(2, "x^2"), make_poly_quotient(3, "x^2")]
    pool.append(direct_product([z(3), z(3)]))
    if 16 <= caps.size:
        pool.append(matrix_ring(z(2), 2))
    limit = min(caps.product, caps.size)
    for a, b in combinations_with_replacement(range(len(pool)), 2):
        if pool[a].size * pool[b].size <= limit:
            yield ("product",), lambda a=a, b=b: direct_product([pool[a], pool[b]])
    for k in (3, 4):
        if 2 ** k <= limit:
            yield ("product", "boolean"), lambda k=k: direct_product([z(2)] * k)


def corpus_generate(caps=None):
    """Deterministic corpus; caps only ever shrink it."""
    caps = caps or Caps()
    out = []
    for tags, build in _families(caps):
        ring = build()
        if ring.size > caps.size:
            continue
        out.append(CorpusEntry(ring, _attach_involutions(ring, caps.involutions),
                               attach_polynomials(ring), tags))
    return out


_DEFAULT = {}


def default_corpus():
    """The default-cap corpus, built once per process."""
    if "corpus" not in _DEFAULT:
        _DEFAULT["corpus"] = corpus_generate()
    return _DEFAULT["corpus"]


def corpus_entry(corpus, provenance):
    for entry in corpus:
        if entry.provenance == provenance:
            return entry
    raise KeyError(provenance)


# -- queries ------------------------------------------------------------------

_RING_LEVEL = set(classify.RING_FLAGS)
_ELEMENT_LEVEL = set(classify.ELEMENT_FLAGS) | {"sasr1_or_two_p_plus_one"}
_TOKEN = re.compile(r"\s*(?:(?P<not>[!¬])|(?P<and>&&|&|∧)|(?P<name>[A-Za-z_][A-Za-z0-9_]*))")


@dataclass(frozen=True)
class WitnessQuery:
    """Conjunction of possibly negated flag names, ring- or element-level."""

    terms: tuple
    element: bool = False
    text: str = ""
    scope: str = None

    @property
    def needs_star(self):
        return any(self._family(name) == "star" for name, _ in self.terms)

    @property
    def needs_g(self):
        return any(self._family(name) == "g" for name, _ in self.terms)

    @staticmethod
    def _family(name):
        flag = classify.RING_CONJUNCTIONS.get(name, name)
        if flag in classify.STAR_FLAGS or flag == "sasr1_or_two_p_plus_one" \
                or name in classify.STAR_STRUCTURE_FLAGS:
            return "star"
        if flag in classify.G_FLAGS:
            return "g"
        return "plain"


def parse_query(text, scope=None):
    """Parse ``"[element:] [!]flag & [!]flag ..."``; ``∧`` and ``¬`` are accepted."""
    body = text.strip()
    element = False
    if body.startswith("element:"):
        element = True
        body = body[len("element:"):]
    known = _ELEMENT_LEVEL if element else _RING_LEVEL
    terms = []
    pos = 0
    expect_term = True
    negate = False
    while pos < len(body):
        m = _TOKEN.match(body, pos)
        if not m or m.end() == pos:
            if body[pos:].strip() == "":
                break
            raise UnknownFlag(f"cannot read query at {body[pos:]!r}")
        pos = m.end()
        if m.group("not"):
            if not expect_term:
                raise UnknownFlag("negation must precede a flag")
            negate = not negate
        elif m.group("and"):
            if expect_term:
                raise UnknownFlag("dangling conjunction")
            expect_term = True
        else:
            name = m.group("name")
            if not expect_term:
                raise UnknownFlag(f"missing conjunction before {name!r}")
            if name not in known:
                level = "element" if element else "ring"
                raise UnknownFlag(f"unknown {level} flag {name!r}")
            terms.append((name, not negate))
            negate = False
            expect_term = False
    if expect_term:
        raise UnknownFlag("empty or incomplete query")
    return WitnessQuery(tuple(terms), element, text, scope)


@dataclass
class SearchResult:
    query: str
    witnesses: list
    scanned_rings: int
    scanned_pairs: int
    elapsed: float

    def __len__(self):
        return len(self.witnesses)


@dataclass(frozen=True)
class Witness:
    ring: str
    star: str = None
    g: str = None
    element: int = None
    element_name: str = None

    def label(self):
        parts = [self.ring]
        if self.star:
            parts.append(f"star={self.star}")
        if self.g:
            parts.append(f"g={self.g}")
        if self.element_name is not None:
            parts.append(f"element={self.element_name}")
        return " ".join(parts)


def _contexts(entry, query):
    invs = entry.involutions if query.needs_star else [None]
    polys = entry.polynomials if query.needs_g else [None]
    for inv in invs:
        for g in polys:
            yield inv, g


def _ring_holds(census, query):
    return all(bool(census[name]) == want for name, want in query.terms)


def _element_mask(ring, query, inv, g):
    mask = np.ones(ring.size, dtype=bool)
    for name, want in query.terms:
        m = classify.flag_mask(ring, name, inv, g)
        mask &= m if want else ~m
    return mask


def find_witness(query, corpus):
    """All ``(ring, involution?, polynomial?, element?)`` witnesses in corpus order."""
    if isinstance(query, str):
        query = parse_query(query)
    start = time.perf_counter()
    found = []
    rings = pairs = 0
    for entry in corpus:
        if query.scope and entry.provenance != query.scope:
            continue
        rings += 1
        for inv, g in _contexts(entry, query):
            pairs += 1
            ring = entry.ring
            tag = dict(ring=ring.provenance, star=inv.name if inv is not None else None,
                       g=g.text if g is not None else None)
            if query.element:
                for x in np.flatnonzero(_element_mask(ring, query, inv, g)):
                    found.append(Witness(**tag, element=int(x), element_name=ring.name(int(x))))
            elif _ring_holds(ring_census(ring, inv, g), query):
                found.append(Witness(**tag))
    return SearchResult(query.text, found, rings, pairs, time.perf_counter() - start)


def reverify(witness, query, corpus):
    """Recompute a witness from a fresh census; True when it still satisfies the query."""
    if isinstance(query, str):
        query = parse_query(query)
    entry = corpus_entry(corpus, witness.ring)
    inv = next((i for i in entry.involutions if i.name == witness.star), None)
    g = next((p for p in entry.polynomials if p.text == witness.g), None)
    if query.element:
        return bool(_element_mask(entry.ring, query, inv, g)[witness.element])
    return _ring_holds(ring_census(entry.ring, inv, g), query)
