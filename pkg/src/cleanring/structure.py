"""Structural companions of a finite ring: ideals, maps, subrings, gradings."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadEndomorphism,
    CapExceeded,
    ImproperIdeal,
    NotAHomomorphism,
    NotAnIdeal,
    NotDirectSum,
    NotIdempotent,
    NotSubgroup,
    OneNotInG0,
    ProductLeak,
)
from .ring import FiniteRing, build_ring

ENDOMORPHISM_CAP = 64


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer with the element that decided it (if any)."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteRing
    members: frozenset

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def sorted(self):
        return sorted(self.members)


@dataclass(frozen=True, eq=False)
class RingMap:
    """An additive, multiplicative map between two rings.

    ``unital`` is False only for inclusions of corner rings, which send the
    corner's identity ``e`` to ``e`` rather than to 1.
    """

    source: FiniteRing
    target: FiniteRing
    image: np.ndarray
    unital: bool = True
    name: str = field(default="", compare=False)

    def __call__(self, x):
        return int(self.image[x])

    def is_surjective(self):
        return len(np.unique(self.image)) == self.target.size


def ring_map(source, target, image, unital=True, name=""):
    """Validate ``image`` as a ring homomorphism and wrap it."""
    image = np.asarray(image, dtype=np.int32)
    if image.shape != (source.size,):
        raise NotAHomomorphism("image table has the wrong length")
    if image.min() < 0 or image.max() >= target.size:
        raise NotAHomomorphism("image entries out of range")
    bad = np.argwhere(image[source.add] != target.add[image[:, None], image[None, :]])
    if bad.size:
        raise NotAHomomorphism(f"not additive at {tuple(int(v) for v in bad[0])}")
    bad = np.argwhere(image[source.mul] != target.mul[image[:, None], image[None, :]])
    if bad.size:
        raise NotAHomomorphism(f"not multiplicative at {tuple(int(v) for v in bad[0])}")
    if unital and image[source.one] != target.one:
        raise NotAHomomorphism("identity is not preserved")
    image.setflags(write=False)
    return RingMap(source, target, image, unital, name)


def identity_map(ring):
    return RingMap(ring, ring, np.arange(ring.size, dtype=np.int32), True, "id")


# -- ideals -----------------------------------------------------------------


def make_ideal(ring, members):
    members = frozenset(int(m) for m in members)
    arr = np.array(sorted(members), dtype=np.int64)
    if ring.zero not in members:
        raise NotAnIdeal("ideal must contain zero")
    mask = np.zeros(ring.size, dtype=bool)
    mask[arr] = True
    if not mask[ring.add[np.ix_(arr, arr)]].all():
        raise NotAnIdeal("not closed under addition")
    if not mask[ring.mul[:, arr]].all() or not mask[ring.mul[arr, :]].all():
        raise NotAnIdeal("does not absorb multiplication")
    return Ideal(ring, members)


def ideal_closure(ring, gens):
    """Smallest two-sided ideal containing ``gens``."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero] = True
    for g in gens:
        mask[int(g)] = True
    while True:
        arr = np.flatnonzero(mask)
        new = mask.copy()
        new[ring.add[np.ix_(arr, arr)].ravel()] = True
        new[ring.neg[arr]] = True
        new[ring.mul[:, arr].ravel()] = True
        new[ring.mul[arr, :].ravel()] = True
        if (new == mask).all():
            break
        mask = new
    return Ideal(ring, frozenset(int(i) for i in np.flatnonzero(mask)))


def principal_ideals(ring):
    """Distinct two-sided ideals generated by a single element, by generator id."""
    seen = {}
    for x in ring.elements:
        ideal = ideal_closure(ring, [x])
        seen.setdefault(ideal.members, ideal)
    return list(seen.values())


def quotient_ring(ring, ideal):
    """``R/I`` with its canonical surjection; coset representatives are minimal ids."""
    if len(ideal) == ring.size:
        raise ImproperIdeal("quotient by the whole ring is the zero ring")
    members = np.array(ideal.sorted())
    reps_of = ring.add[:, members].min(axis=1)
    reps = np.unique(reps_of)
    label = np.searchsorted(reps, reps_of)
    add = label[ring.add[np.ix_(reps, reps)]]
    mul = label[ring.mul[np.ix_(reps, reps)]]
    names = [f"[{ring.name(r)}]" for r in reps]
    gens = ",".join(f'"{ring.name(m)}"' for m in _ideal_generators(ring, ideal))
    quot = build_ring(
        add, mul, int(label[ring.zero]), int(label[ring.one]), names=names,
        provenance=f"quot({ring.provenance},{gens})",
        meta={"kind": "quotient", "parent": ring, "ideal": ideal, "reps": reps},
    )
    return quot, ring_map(ring, quot, label, name="quotient")


def _ideal_generators(ring, ideal):
    """A small generating set, chosen greedily by id."""
    gens = []
    covered = {ring.zero}
    for x in ideal.sorted():
        if x not in covered:
            gens.append(x)
            covered = set(ideal_closure(ring, gens).members)
    return gens


def _regular_in(ring, a, pool):
    for b in pool:
        if ring.mul[ring.mul[a, b], a] == a:
            return True
    return False


def is_regular_ideal(ring, ideal):
    """Every ``a`` in ``I`` has ``b`` in ``I`` with ``a = aba``; witness is a failing ``a``."""
    pool = ideal.sorted()
    for a in pool:
        if not _regular_in(ring, a, pool):
            return Verdict(False, a)
    return Verdict(True)


def idempotents_lift(ring, ideal):
    """Every idempotent coset of ``R/I`` contains an idempotent of ``R``.

    The witness on failure is the minimal representative of an unliftable
    coset.
    """
    if len(ideal) == ring.size:
        return Verdict(True)
    quot, proj = quotient_ring(ring, ideal)
    q_idem = np.flatnonzero(quot.mul[np.arange(quot.size), np.arange(quot.size)] == np.arange(quot.size))
    r_idem = np.flatnonzero(ring.mul[np.arange(ring.size), np.arange(ring.size)] == np.arange(ring.size))
    lifted = set(int(v) for v in proj.image[r_idem])
    for q in q_idem:
        if int(q) not in lifted:
            return Verdict(False, int(quot.meta["reps"][q]))
    return Verdict(True)


# -- subrings ---------------------------------------------------------------


def subring(ring, members, one, provenance, kind="subring"):
    """Relabel a multiplicatively closed additive subgroup as its own ring.

    ``one`` is the identity of the subring (which need not be that of
    ``ring``).  Returns the ring and the inclusion map into ``ring``.
    """
    members = np.array(sorted(set(int(m) for m in members)))
    index = -np.ones(ring.size, dtype=np.int64)
    index[members] = np.arange(len(members))
    add = index[ring.add[np.ix_(members, members)]]
    mul = index[ring.mul[np.ix_(members, members)]]
    if (add < 0).any() or (mul < 0).any():
        raise NotAnIdeal("member set is not closed under the ring operations")
    names = [ring.name(m) for m in members]
    sub = build_ring(
        add, mul, int(index[ring.zero]), int(index[one]), names=names,
        provenance=provenance, meta={"kind": kind, "parent": ring, "members": members},
    )
    inclusion = RingMap(sub, ring, members.astype(np.int32), unital=(one == ring.one), name="inclusion")
    return sub, inclusion


def corner_ring(ring, e):
    """``eRe`` with identity ``e``, plus its (non-unital unless e=1) inclusion."""
    e = int(e)
    if ring.mul[e, e] != e:
        raise NotIdempotent(f"{ring.name(e)} is not idempotent")
    if e == ring.zero:
        raise NotIdempotent("the corner at 0 is the zero ring")
    members = np.unique(ring.mul[ring.mul[e, :], e])
    return subring(ring, members, e, f'corner({ring.provenance},"{ring.name(e)}")', kind="corner")


def center(ring):
    mask = (ring.mul == ring.mul.T).all(axis=0)
    members = np.flatnonzero(mask)
    return subring(ring, members, ring.one, f"center({ring.provenance})", kind="center")


def unit_mask(ring):
    one = ring.one
    left = ring.mul == one
    return (left & left.T).any(axis=1)


def jacobson_radical(ring):
    """``{x : 1 - r x is a unit for every r}``."""
    units = unit_mask(ring)
    mask = units[ring.sub[ring.one][ring.mul]].all(axis=0)
    return Ideal(ring, frozenset(int(i) for i in np.flatnonzero(mask)))


# -- additive generators and map search -------------------------------------


def additive_generators(ring):
    """Greedy generating set of ``(R, +)`` starting from 1, in id order."""
    gens = [ring.one]
    span = _span(ring, gens)
    for x in ring.elements:
        if not span[x]:
            gens.append(x)
            span = _span(ring, gens)
    return gens


def _span(ring, gens):
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero] = True
    frontier = [ring.zero]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                y = ring.add[m, g]
                if not mask[y]:
                    mask[y] = True
                    nxt.append(y)
        frontier = nxt
    return mask


def _extend(ring, target, gens, images):
    """Additive extension of ``gens -> images`` to their span, or None."""
    phi = -np.ones(ring.size, dtype=np.int64)
    phi[ring.zero] = target.zero
    frontier = [ring.zero]
    while frontier:
        nxt = []
        for m in frontier:
            pm = phi[m]
            for g, img in zip(gens, images):
                y = ring.add[m, g]
                val = target.add[pm, img]
                if phi[y] < 0:
                    phi[y] = val
                    nxt.append(y)
                elif phi[y] != val:
                    return None
        frontier = nxt
    # edges out of the span's interior are all checked above; still confirm
    # every edge between spanned elements
    dom = np.flatnonzero(phi >= 0)
    for g, img in zip(gens, images):
        if (phi[ring.add[dom, g]] != target.add[phi[dom], img]).any():
            return None
    return phi


def search_maps(ring, target, anti=False, involutive=False):
    """All unital additive maps ``ring -> target`` that are (anti-)multiplicative.

    With ``involutive`` (requires ``target is ring``) the map must also be
    its own inverse.  Backtracks over images of the additive generators and
    prunes on every product already determined.
    """
    gens = additive_generators(ring)
    found = []

    def consistent(phi):
        dom = np.flatnonzero(phi >= 0)
        sub = np.ix_(dom, dom)
        prod = ring.mul[sub]
        known = phi[prod] >= 0
        lhs = phi[prod]
        if anti:
            rhs = target.mul[phi[dom][None, :], phi[dom][:, None]]
        else:
            rhs = target.mul[phi[dom][:, None], phi[dom][None, :]]
        if (known & (lhs != rhs)).any():
            return False
        if involutive:
            img = phi[dom]
            back = phi[img]
            if ((back >= 0) & (back != dom)).any():
                return False
        return True

    def rec(images):
        phi = _extend(ring, target, gens[: len(images)], images)
        if phi is None or not consistent(phi):
            return
        if len(images) == len(gens):
            if len(np.unique(phi)) == target.size or not involutive:
                found.append(phi.astype(np.int32))
            return
        for cand in range(target.size):
            rec(images + [cand])

    rec([target.one])
    return found


def endomorphisms(ring, cap=ENDOMORPHISM_CAP):
    """Every unital ring endomorphism, identity first."""
    if ring.size > cap:
        raise CapExceeded(f"endomorphism search capped at {cap} elements")
    maps = [ring_map(ring, ring, phi) for phi in search_maps(ring, ring)]
    ident = np.arange(ring.size)
    maps.sort(key=lambda m: (not np.array_equal(m.image, ident), m.image.tolist()))
    return maps


def endomorphism(ring, image, name=""):
    try:
        return ring_map(ring, ring, image, name=name)
    except NotAHomomorphism as exc:
        raise BadEndomorphism(str(exc)) from exc


def frobenius_map(ring):
    """``x -> x^p`` where ``p`` is the additive order of 1, if that is prime and the map is an endomorphism."""
    p = characteristic(ring)
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise BadEndomorphism("frobenius needs prime characteristic")
    image = np.arange(ring.size)
    for _ in range(p - 1):
        image = ring.mul[image, np.arange(ring.size)]
    return endomorphism(ring, image, name="frobenius")


def characteristic(ring):
    """Additive order of 1."""
    k = 1
    acc = ring.one
    while acc != ring.zero:
        acc = ring.add[acc, ring.one]
        k += 1
    return k


# -- gradings ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Grading:
    ring: FiniteRing
    parts: tuple

    def degree_zero_ring(self):
        return subring(self.ring, self.parts[0], self.ring.one,
                       f"degree0({self.ring.provenance})", kind="degree0")


def grading_validate(ring, parts):
    """Check that ``parts`` is a grading ``G_0 + G_1 + ... + G_k`` of ``ring``."""
    if not parts:
        raise NotSubgroup("a grading needs at least one part")
    parts = tuple(frozenset(int(x) for x in p) for p in parts)
    for n, part in enumerate(parts):
        if ring.zero not in part:
            raise NotSubgroup(f"G_{n} lacks zero", (n,))
        for a in sorted(part):
            for b in sorted(part):
                if ring.add[a, b] not in part:
                    raise NotSubgroup(f"G_{n} not closed under addition", (n, a, b))
    if int(np.prod([len(p) for p in parts])) != ring.size:
        raise NotDirectSum("part sizes do not multiply to the ring size")
    sums = np.array([ring.zero])
    for part in parts:
        arr = np.array(sorted(part))
        sums = ring.add[sums[:, None], arr[None, :]].ravel()
    if len(np.unique(sums)) != ring.size:
        raise NotDirectSum("some element has two decompositions")
    if ring.one not in parts[0]:
        raise OneNotInG0("identity is not homogeneous of degree 0")
    k = len(parts) - 1
    for n, pn in enumerate(parts):
        for m, pm in enumerate(parts):
            allowed = parts[n + m] if n + m <= k else frozenset([ring.zero])
            for a in sorted(pn):
                for b in sorted(pm):
                    if ring.mul[a, b] not in allowed:
                        raise ProductLeak(f"G_{n} G_{m} leaves G_{n + m}", (n, m, a, b))
    return Grading(ring, parts)
