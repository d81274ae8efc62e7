"""Finite unital rings stored as dense Cayley tables.

Elements are the integers ``0 .. size-1``; ``add`` and ``mul`` are
``size x size`` integer arrays.  Every ring handed out by this package has
been through :func:`ring_violations`, so downstream code may assume the
ring axioms.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    BadIdentity,
    NotAGroup,
    NotAssociative,
    NotDistributive,
    RingAxiomError,
    UnknownElementName,
    ZeroEqualsOne,
)

MAX_SIZE = 4096
FULL_VALIDATION_LIMIT = 512
SAMPLE_TRIPLES = 100_000

_AXIOM_ERRORS = {
    "zero equals one": ZeroEqualsOne,
    "additive identity": NotAGroup,
    "additive commutativity": NotAGroup,
    "additive inverse": NotAGroup,
    "additive associativity": NotAGroup,
    "multiplicative identity": BadIdentity,
    "multiplicative associativity": NotAssociative,
    "left distributivity": NotDistributive,
    "right distributivity": NotDistributive,
}


class FiniteRing:
    """A validated finite ring with identity.

    Use :func:`build_ring` (or one of the constructors) rather than calling
    the class directly; the constructor here trusts its input.
    """

    def __init__(self, add, mul, zero, one, names=None, provenance="", meta=None):
        self.add = _frozen(add)
        self.mul = _frozen(mul)
        self.size = int(self.add.shape[0])
        self.zero = int(zero)
        self.one = int(one)
        if names is None:
            names = [str(i) for i in range(self.size)]
        self.names = tuple(names)
        self.provenance = provenance
        self.meta = dict(meta or {})
        self._cache = {}
        self._name_index = None

        neg = np.argmax(self.add == self.zero, axis=1)
        self.neg = _frozen(neg)

    def __repr__(self):
        return f"FiniteRing({self.provenance or '?'}, size={self.size})"

    def __len__(self):
        return self.size

    @property
    def elements(self):
        return range(self.size)

    @property
    def sub(self):
        """Table of ``x - y``."""
        if "sub" not in self._cache:
            self._cache["sub"] = _frozen(self.add[:, self.neg])
        return self._cache["sub"]

    def plus(self, x, y):
        return int(self.add[x, y])

    def minus(self, x, y):
        return int(self.add[x, self.neg[y]])

    def times(self, x, y):
        return int(self.mul[x, y])

    def negate(self, x):
        return int(self.neg[x])

    def power(self, x, k):
        result = self.one
        for _ in range(k):
            result = int(self.mul[result, x])
        return result

    def multiple(self, k):
        """The element ``k * 1`` for an integer ``k``."""
        acc = self.zero
        for _ in range(abs(k)):
            acc = int(self.add[acc, self.one])
        return int(self.neg[acc]) if k < 0 else acc

    def is_commutative(self):
        if "commutative" not in self._cache:
            self._cache["commutative"] = bool(np.array_equal(self.mul, self.mul.T))
        return self._cache["commutative"]

    def name(self, x):
        return self.names[x]

    def element(self, ref):
        """Look an element up by display name or by ``#<id>``."""
        if isinstance(ref, (int, np.integer)):
            if 0 <= ref < self.size:
                return int(ref)
            raise UnknownElementName(f"no element with id {ref}")
        ref = str(ref).strip()
        if ref.startswith("#") and ref[1:].isdigit():
            return self.element(int(ref[1:]))
        if self._name_index is None:
            self._name_index = {}
            for i, n in enumerate(self.names):
                self._name_index.setdefault(n.replace(" ", ""), i)
        key = ref.replace(" ", "")
        if key in self._name_index:
            return self._name_index[key]
        raise UnknownElementName(f"no element named {ref!r} in {self.provenance or 'ring'}")

    def same_tables(self, other):
        return (
            self.size == other.size
            and self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )


def _frozen(table):
    arr = np.array(table, dtype=np.int32)
    arr.setflags(write=False)
    return arr


def ring_violations(add, mul, zero, one, rng=None):
    """Scan the ring axioms and return a list of ``(axiom, witness)`` pairs.

    Up to :data:`FULL_VALIDATION_LIMIT` elements every triple is checked;
    above that the triple axioms are sampled.  Only the first failing tuple
    of each axiom is reported.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0]
    ids = np.arange(n)
    found = []

    def report(axiom, witness):
        if axiom not in {a for a, _ in found}:
            found.append((axiom, tuple(int(w) for w in witness)))

    if zero == one:
        report("zero equals one", (zero,))

    bad = np.flatnonzero((add[zero] != ids) | (add[:, zero] != ids))
    if bad.size:
        report("additive identity", (bad[0],))
    pairs = np.argwhere(add != add.T)
    if pairs.size:
        report("additive commutativity", pairs[0])
    bad = np.flatnonzero(~(add == zero).any(axis=1))
    if bad.size:
        report("additive inverse", (bad[0],))
    bad = np.flatnonzero((mul[one] != ids) | (mul[:, one] != ids))
    if bad.size:
        report("multiplicative identity", (bad[0],))

    if n <= FULL_VALIDATION_LIMIT:
        for a in range(n):
            left = add[add[a]]            # (a+b)+c
            right = add[a][add]           # a+(b+c)
            hit = np.argwhere(left != right)
            if hit.size:
                report("additive associativity", (a, *hit[0]))
            left = mul[mul[a]]            # (ab)c
            right = mul[a][mul]           # a(bc)
            hit = np.argwhere(left != right)
            if hit.size:
                report("multiplicative associativity", (a, *hit[0]))
            row = mul[a]
            left = row[add]               # a(b+c)
            right = add[row[:, None], row[None, :]]
            hit = np.argwhere(left != right)
            if hit.size:
                report("left distributivity", (a, *hit[0]))
            col = mul[:, a]
            left = col[add]               # (b+c)a
            right = add[col[:, None], col[None, :]]
            hit = np.argwhere(left != right)
            if hit.size:
                report("right distributivity", (a, *hit[0]))
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, SAMPLE_TRIPLES))
        checks = [
            ("additive associativity", add[add[a, b], c], add[a, add[b, c]]),
            ("multiplicative associativity", mul[mul[a, b], c], mul[a, mul[b, c]]),
            ("left distributivity", mul[a, add[b, c]], add[mul[a, b], mul[a, c]]),
            ("right distributivity", mul[add[b, c], a], add[mul[b, a], mul[c, a]]),
        ]
        for axiom, left, right in checks:
            hit = np.flatnonzero(left != right)
            if hit.size:
                k = hit[0]
                report(axiom, (a[k], b[k], c[k]))
    return found


def build_ring(add, mul, zero, one, names=None, provenance="", meta=None):
    """Validate a pair of tables and return the :class:`FiniteRing`.

    Raises the :class:`RingAxiomError` subclass matching the first failing
    axiom; the exception carries every violation found.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
        raise ValueError("operation tables must be square and of equal size")
    n = add.shape[0]
    if n < 2:
        raise ValueError("a ring needs at least two elements")
    if n > MAX_SIZE:
        raise ValueError(f"ring of size {n} exceeds the global cap {MAX_SIZE}")
    for table in (add, mul):
        if table.min() < 0 or table.max() >= n:
            raise ValueError("table entries out of range")
    if not (0 <= zero < n and 0 <= one < n):
        raise ValueError("zero/one out of range")
    if names is not None and len(names) != n:
        raise ValueError("names must have one entry per element")

    violations = ring_violations(add, mul, zero, one)
    if violations:
        raise _AXIOM_ERRORS[violations[0][0]](violations)
    return FiniteRing(add, mul, zero, one, names=names, provenance=provenance, meta=meta)


__all__ = [
    "FiniteRing",
    "RingAxiomError",
    "build_ring",
    "ring_violations",
    "MAX_SIZE",
]
