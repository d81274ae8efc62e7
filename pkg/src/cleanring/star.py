"""Involutions on finite rings and the projections they determine."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from .errors import (
    BadEndomorphism,
    CapExceeded,
    NotAdditive,
    NotAntiMultiplicative,
    NotInvolutive,
    NotStarInvariant,
)
from .structure import frobenius_map, search_maps

INVOLUTION_CAP = 32


@dataclass(frozen=True, eq=False)
class Involution:
    ring: object
    star: np.ndarray
    name: str = "id"
    components: tuple = field(default=(), compare=False)

    def __call__(self, x):
        return int(self.star[x])

    @property
    def provenance(self):
        return f"star({self.ring.provenance},{self.name})"

    def is_identity(self):
        return bool((self.star == np.arange(self.ring.size)).all())

    def same_table(self, other):
        return np.array_equal(self.star, other.star)

    def __repr__(self):
        return f"Involution({self.provenance})"


def validate_involution(ring, table, name="id", components=()):
    """Check additivity, anti-multiplicativity and order two; wrap the table."""
    star = np.asarray(table, dtype=np.int32)
    n = ring.size
    if star.shape != (n,) or sorted(star.tolist()) != list(range(n)):
        raise ValueError("involution table must be a permutation of the element ids")
    bad = np.argwhere(star[ring.add] != ring.add[star[:, None], star[None, :]])
    if bad.size:
        raise NotAdditive("(x+y)* != x*+y*", tuple(int(v) for v in bad[0]))
    bad = np.argwhere(star[ring.mul] != ring.mul[star[None, :], star[:, None]])
    if bad.size:
        raise NotAntiMultiplicative("(xy)* != y*x*", tuple(int(v) for v in bad[0]))
    bad = np.flatnonzero(star[star] != np.arange(n))
    if bad.size:
        raise NotInvolutive("x** != x", (int(bad[0]),))
    # consequence of the three axioms; kept as a guard
    assert star[ring.one] == ring.one
    star.setflags(write=False)
    return Involution(ring, star, name, tuple(components))


def identity_involution(ring):
    return validate_involution(ring, np.arange(ring.size), "id")


def projections(inv):
    """``{p : p^2 = p = p*}``."""
    ring = inv.ring
    ids = np.arange(ring.size)
    mask = (ring.mul[ids, ids] == ids) & (inv.star == ids)
    return frozenset(int(p) for p in np.flatnonzero(mask))


def product_involution(ring, invs):
    """Componentwise involution on a direct product built from ``invs``' rings."""
    coords = ring.meta["coords"]
    factors = ring.meta["factors"]
    sizes = [f.size for f in factors]
    w = np.cumprod([1] + sizes[:-1])
    table = np.zeros(ring.size, dtype=np.int64)
    for k, inv in enumerate(invs):
        table += inv.star[coords[:, k]] * w[k]
    if all(inv.is_identity() for inv in invs):
        name = "id"
    else:
        name = "componentwise(" + ",".join(inv.name for inv in invs) + ")"
    return validate_involution(ring, table, name, components=tuple(invs))


def swap_involution(ring):
    """``(a,b)* = (b,a)`` on ``A x A``."""
    factors = ring.meta.get("factors", ())
    if len(factors) != 2 or factors[0].provenance != factors[1].provenance:
        raise ValueError("swap needs a product of two equal factors")
    coords = ring.meta["coords"]
    size = ring.meta["factors"][0].size
    table = coords[:, 1] + coords[:, 0] * size
    return validate_involution(ring, table, "swap")


def transpose_involution(ring):
    kind = ring.meta.get("kind")
    if kind not in ("matrix", "triangular"):
        raise ValueError("transpose needs a matrix or triangular ring")
    coords = ring.meta["coords"]
    base = ring.meta["base"]
    if kind == "matrix":
        k = ring.meta["k"]
        A = coords.reshape(-1, k, k).transpose(0, 2, 1).reshape(-1, k * k)
    elif kind == "triangular":
        # reflect [[a,0],[m,b]] across the anti-diagonal: [[b,0],[m,a]]
        A = coords[:, [2, 1, 0]]
    w = base.size ** np.arange(A.shape[1])
    return validate_involution(ring, A @ w, "transpose")


def _series_involution(ring, base_inv):
    coords = ring.meta["coords"]
    base = ring.meta["base"]
    w = base.size ** np.arange(coords.shape[1])
    table = base_inv.star[coords] @ w
    return validate_involution(ring, table, base_inv.name)


def standard_involutions(ring):
    """Involutions available from how ``ring`` was built, identity first."""
    kind = ring.meta.get("kind")
    found = []

    def push(make):
        try:
            inv = make()
        except (ValueError, KeyError, BadEndomorphism, NotAdditive, NotAntiMultiplicative, NotInvolutive):
            return
        if not any(inv.same_table(other) for other in found):
            found.append(inv)

    if ring.is_commutative():
        push(lambda: identity_involution(ring))
    if kind == "product":
        factors = ring.meta["factors"]
        per_factor = [standard_involutions(f) for f in factors]
        if all(per_factor):
            for choice in iproduct(*per_factor):
                push(lambda choice=choice: product_involution(ring, list(choice)))
        if len(factors) == 2 and factors[0].provenance == factors[1].provenance:
            push(lambda: swap_involution(ring))
    elif kind in ("matrix", "triangular") and ring.meta["base"].is_commutative():
        push(lambda: transpose_involution(ring))
    elif kind in ("zn", "polyq") and ring.is_commutative():
        def frob():
            phi = frobenius_map(ring)
            if phi.image[phi.image].tolist() != list(range(ring.size)):
                raise ValueError("frobenius does not have order two")
            return validate_involution(ring, phi.image, "frobenius")
        push(frob)
    elif kind == "trunc" and ring.meta["alpha"].name in ("id", ""):
        for base_inv in standard_involutions(ring.meta["base"]):
            push(lambda b=base_inv: _series_involution(ring, b))
    return found


def enumerate_involutions(ring, cap=INVOLUTION_CAP):
    """Every involution of ``ring``, named ``enumerated:<k>`` (identity is 0)."""
    if ring.size > cap:
        raise CapExceeded(f"involution enumeration capped at {cap} elements")
    tables = search_maps(ring, ring, anti=True, involutive=True)
    ident = list(range(ring.size))
    tables.sort(key=lambda t: (t.tolist() != ident, t.tolist()))
    return [validate_involution(ring, t, f"enumerated:{k}") for k, t in enumerate(tables)]


def involution_by_name(ring, name):
    """Resolve a standard involution name or ``enumerated:<k>``."""
    if name.startswith("enumerated:"):
        k = int(name.split(":", 1)[1])
        invs = enumerate_involutions(ring)
        if not 0 <= k < len(invs):
            raise ValueError(f"{ring.provenance} has only {len(invs)} involutions")
        return invs[k]
    if name == "id":
        return identity_involution(ring)
    if name == "swap":
        return swap_involution(ring)
    if name == "transpose":
        return transpose_involution(ring)
    for inv in standard_involutions(ring):
        if inv.name == name:
            return inv
    raise ValueError(f"no involution named {name!r} on {ring.provenance}")


def induced_involution(inv, target):
    """Carry ``inv`` to a quotient by a *-invariant ideal or to a truncated series ring."""
    kind = target.meta.get("kind")
    if kind == "quotient" and target.meta["parent"] is inv.ring:
        ideal = target.meta["ideal"]
        for i in ideal.sorted():
            if int(inv.star[i]) not in ideal.members:
                raise NotStarInvariant("ideal is not *-invariant", (i,))
        reps = target.meta["reps"]
        ring = inv.ring
        members = np.array(ideal.sorted())
        label_of = np.searchsorted(reps, ring.add[:, members].min(axis=1))
        table = label_of[inv.star[reps]]
        return validate_involution(target, table, inv.name)
    if kind == "trunc" and target.meta["base"] is inv.ring:
        alpha = target.meta["alpha"]
        if not (alpha.image == np.arange(inv.ring.size)).all():
            raise ValueError("coefficientwise involution needs the identity twist")
        return _series_involution(target, inv)
    raise ValueError("target must be a quotient of, or truncated series over, the involution's ring")


def is_star_invariant(inv, ideal):
    return all(int(inv.star[i]) in ideal.members for i in ideal.members)


def restrict_to_corner(inv, corner, inclusion):
    """Restriction of ``inv`` to ``eRe`` for a projection ``e``."""
    index = {int(v): k for k, v in enumerate(inclusion.image)}
    table = [index[int(inv.star[v])] for v in inclusion.image]
    return validate_involution(corner, table, inv.name)
