"""Executable checks C01-C33 over concrete finite rings.

Each check evaluates one statement about clean-type decompositions on the
inputs it is given and returns a :class:`CheckReport`:

* ``verified`` -- hypotheses held and the conclusion (and, for constructive
  statements, the explicit witness formulas) re-verified;
* ``not-applicable`` -- a named hypothesis failed; the witness says where;
* ``counterexample`` -- the conclusion or a stated construction failed.

A counterexample on any input means an implementation bug, since every
statement here is a theorem.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import classify
from .classify import CentralPolynomial, integer_polynomial, ring_census, weakly_g_r_clean_mask
from .constructors import direct_product, triangular_ring, truncated_skew_series
from .errors import ArityMismatch, UnknownCheck
from .star import induced_involution, is_star_invariant, product_involution, restrict_to_corner
from .structure import (
    center,
    corner_ring,
    grading_validate,
    identity_map,
    idempotents_lift,
    is_regular_ideal,
    jacobson_radical,
    principal_ideals,
    quotient_ring,
    ring_map,
)

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "not-applicable"
STATUSES = (VERIFIED, COUNTEREXAMPLE, NOT_APPLICABLE)


@dataclass
class CheckReport:
    check_id: str
    statement: str
    inputs: str
    status: str
    witness: dict = None
    notes: list = field(default_factory=list)
    elapsed: float = 0.0
    scanned: int = 0

    def as_dict(self):
        return {
            "check_id": self.check_id, "statement": self.statement, "inputs": self.inputs,
            "status": self.status, "witness": self.witness, "notes": list(self.notes),
            "elapsed": self.elapsed, "scanned": self.scanned,
        }


class _Stop(Exception):
    def __init__(self, status, reason, witness):
        self.status = status
        self.reason = reason
        self.witness = witness


class _Run:
    """Bookkeeping for one check invocation."""

    def __init__(self):
        self.scanned = 0
        self.notes = []

    def need(self, cond, precondition, **witness):
        if not cond:
            raise _Stop(NOT_APPLICABLE, precondition, witness)

    def claim(self, cond, what, **witness):
        if not cond:
            raise _Stop(COUNTEREXAMPLE, what, witness)

    def note(self, text):
        if text not in self.notes:
            self.notes.append(text)


class _Ar:
    """Element arithmetic on one ring, with id results."""

    def __init__(self, ring):
        self.r = ring
        self.b = classify._basic(ring)
        self.one = ring.one
        self.zero = ring.zero

    def add(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = int(self.r.add[acc, x])
        return int(acc)

    def sub(self, x, y):
        return int(self.r.add[x, self.r.neg[y]])

    def neg(self, x):
        return int(self.r.neg[x])

    def mul(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = int(self.r.mul[acc, x])
        return int(acc)

    def pow(self, x, k):
        return self.r.power(x, k)

    def is_unit(self, x):
        return bool(self.b["unit"][x])

    def inverse(self, x):
        return int(self.b["inverse"][x])

    def is_idem(self, x):
        return int(self.r.mul[x, x]) == x

    def comp(self, e):
        """``1 - e``."""
        return self.sub(self.one, e)

    def two(self):
        return self.add(self.one, self.one)

    def name(self, x):
        return self.r.name(x)


def _census(ring, inv=None, g=None):
    key = ("census", id(inv), id(g))
    hit = ring._cache.get(key)
    if hit is not None and hit[0] is inv and hit[1] is g:
        return hit[2]
    c = ring_census(ring, inv, g)
    ring._cache[key] = (inv, g, c)
    return c


def _weak(ring, flag, inv=None, g=None):
    """``(mask, type, a, b)`` arrays for a weak notion."""
    if flag in classify.STAR_FLAGS:
        mask, (t, a, b) = classify._star(inv)[flag]
    elif flag in classify.G_FLAGS:
        mask, (t, a, b) = classify._g(g)[flag]
    else:
        mask, (t, a, b) = classify._plain(ring)[flag]
    return mask, t, a, b


def _pair(ring, flag, inv=None, g=None):
    if flag in classify.STAR_FLAGS:
        return classify._star(inv)[flag]
    if flag in classify.G_FLAGS:
        return classify._g(g)[flag]
    return classify._plain(ring)[flag]


def _mask(ring, flag, inv=None, g=None):
    return classify.flag_mask(ring, flag, inv, g)


def _first_mismatch(a, b):
    bad = np.flatnonzero(np.asarray(a) != np.asarray(b))
    return int(bad[0]) if bad.size else None


def _x_pow_minus_x(ring, n):
    return integer_polynomial(ring, [0, -1] + [0] * (n - 2) + [1])


# ---------------------------------------------------------------------------
# weakly r-clean rings
# ---------------------------------------------------------------------------


def _c01(run, ring, ideal):
    run.need(len(ideal) < ring.size, "proper ideal")
    c = _census(ring)
    run.need(c["is_weakly_r_clean"], "R weakly r-clean", element=c.witness("is_weakly_r_clean"))
    quot, theta = quotient_ring(ring, ideal)
    S = _Ar(quot)
    _, t, r, e = _weak(ring, "weakly_r_clean")
    reg_s = classify._basic(quot)["regular"]
    for q, x in enumerate(quot.meta["reps"]):
        run.scanned += 1
        rr, ee = theta(r[x]), theta(e[x])
        run.claim(reg_s[rr], "image of a regular element is regular", element=quot.name(q))
        run.claim(S.is_idem(ee), "image of an idempotent is idempotent", element=quot.name(q))
        expect = S.add(rr, ee) if t[x] == 1 else S.sub(rr, ee)
        run.claim(expect == q, "image decomposition reproduces the coset", element=quot.name(q))
    run.claim(_census(quot)["is_weakly_r_clean"], "R/I weakly r-clean")


def _product_bookkeeping(run, ring, factors, flag_t1, flag_t2, invs=None, polys=None):
    coords = ring.meta["coords"]
    inv = None
    g = None
    if invs is not None:
        inv = invs[-1]
        invs = invs[:-1]
    if polys is not None:
        g = polys[-1]
        polys = polys[:-1]
    for flag in (flag_t1, flag_t2):
        whole = _mask(ring, flag, inv, g)
        parts = np.ones(ring.size, dtype=bool)
        for k, f in enumerate(factors):
            fm = _mask(f, flag, invs[k] if invs else None, polys[k] if polys else None)
            parts &= fm[coords[:, k]]
        bad = _first_mismatch(whole, parts)
        run.scanned += ring.size
        run.claim(bad is None, f"{flag} in the product iff in every coordinate",
                  element=None if bad is None else ring.name(bad))


def _c02(run, factors, ring=None):
    run.need(len(factors) >= 2, "at least two factors")
    if ring is None:
        ring = direct_product(factors)
    lhs = _census(ring)["is_weakly_r_clean"]
    not_r = [f.provenance for f in factors if not _census(f)["is_r_clean"]]
    rhs = all(_census(f)["is_weakly_r_clean"] for f in factors) and len(not_r) <= 1
    _product_bookkeeping(run, ring, factors, "weakly_r_clean_t1", "weakly_r_clean_t2")
    run.claim(lhs == rhs, "product weakly r-clean iff factors weakly r-clean with at most one not r-clean",
              product=lhs, factors=rhs)
    if not not_r:
        run.note("clause 'at most one factor not r-clean' vacuous: every factor is r-clean")


def _c03(run, ring):
    c = _census(ring)
    run.need(c["no_zero_divisors"], "no zero divisors")
    b = classify._basic(ring)
    for x in ring.elements:
        run.scanned += 1
        if x != ring.zero and b["regular"][x]:
            run.claim(b["unit"][x], "nonzero regular element is a unit", element=ring.name(x))
    run.claim(c["is_weakly_clean"] == c["is_weakly_r_clean"], "weakly clean iff weakly r-clean")


def _c04(run, ring, idempotent=None):
    R = _Ar(ring)
    if idempotent is None:
        idems = [int(e) for e in np.flatnonzero(R.b["idempotent"]) if e != ring.zero]
    else:
        run.need(R.is_idem(idempotent) and idempotent != ring.zero, "nonzero idempotent",
                 element=ring.name(idempotent))
        idems = [int(idempotent)]
    for e in idems:
        corner, inc = corner_ring(ring, e)
        cb = classify._basic(corner)
        one_minus_e = R.comp(e)
        for u in np.flatnonzero(cb["unit"]):
            w = inc(int(cb["inverse"][u]))
            U = inc(int(u))
            v = R.add(U, one_minus_e)
            winv = R.add(w, one_minus_e)
            for f in np.flatnonzero(cb["idempotent"]):
                run.scanned += 1
                F = inc(int(f))
                a = R.sub(U, F)
                ebar = R.add(F, one_minus_e)
                at = dict(e=ring.name(e), a=ring.name(a), u=ring.name(U), f=ring.name(F))
                run.claim(R.mul(v, winv) == R.one and R.mul(winv, v) == R.one,
                          "u+(1-e) is a unit with inverse w+(1-e)", **at)
                run.claim(R.is_idem(ebar), "f+(1-e) is idempotent", **at)
                run.claim(R.sub(v, ebar) == a, "a = v - (f+(1-e))", **at)


def _c05(run, ring):
    c = _census(ring)
    run.need(c["abelian"], "abelian")
    R = _Ar(ring)
    wc = _mask(ring, "weakly_clean")
    u2, e2 = _pair(ring, "weakly_clean_t2")
    idems = [int(e) for e in np.flatnonzero(R.b["idempotent"])]
    for a in np.flatnonzero(wc):
        a = int(a)
        for e in idems:
            run.scanned += 1
            ae = R.mul(a, e)
            run.claim(wc[ae], "ae weakly clean", a=ring.name(a), e=ring.name(e))
            if u2[a] >= 0:
                u, ep = int(u2[a]), int(e2[a])
                v = R.add(R.mul(u, e), R.comp(e))
                vinv = R.add(R.mul(R.inverse(u), e), R.comp(e))
                ebar = R.add(R.mul(ep, e), R.comp(e))
                at = dict(a=ring.name(a), e=ring.name(e))
                run.claim(R.mul(v, vinv) == R.one, "ue+(1-e) is a unit", **at)
                run.claim(R.is_idem(ebar), "e'e+(1-e) is idempotent", **at)
                run.claim(R.sub(v, ebar) == ae, "ae = v - ebar", **at)


def _c06(run, ring):
    c = _census(ring)
    run.need(c["abelian"], "abelian")
    R = _Ar(ring)
    clean = _mask(ring, "clean")
    wc = _mask(ring, "weakly_clean")
    cu, ce = _pair(ring, "clean")
    idems = [int(e) for e in np.flatnonzero(R.b["idempotent"])]
    eligible = [int(a) for a in ring.elements if clean[a] and clean[R.neg(a)]]
    run.need(bool(eligible), "some a with a and -a clean")
    for a in eligible:
        u, e1 = int(cu[a]), int(ce[a])
        na = R.neg(a)
        u2, e2 = int(cu[na]), int(ce[na])
        for e in idems:
            run.scanned += 1
            at = dict(a=ring.name(a), e=ring.name(e))
            run.claim(clean[R.add(a, e)], "a+e clean", **at)
            run.claim(wc[R.sub(a, e)], "a-e weakly clean", **at)
            idem = R.add(R.mul(R.comp(e1), e), R.mul(e2, R.comp(e)))
            unit = R.sub(R.mul(u, e), R.mul(u2, R.comp(e)))
            run.claim(R.is_idem(idem), "(1-e')e + e''(1-e) idempotent", **at)
            run.claim(R.is_unit(unit), "ue - u'(1-e) unit", **at)
            run.claim(R.sub(unit, idem) == R.sub(a, e), "a-e = unit - idempotent", **at)


def _c07(run, ring):
    c = _census(ring)
    run.need(c["abelian"], "abelian")
    R = _Ar(ring)
    wc = _mask(ring, "weakly_clean")
    wr = _mask(ring, "weakly_r_clean")
    bad = _first_mismatch(wc, wr)
    run.claim(bad is None, "weakly clean elements = weakly r-clean elements",
              element=None if bad is None else ring.name(bad))
    run.claim(c["is_weakly_clean"] == c["is_weakly_r_clean"], "weakly clean iff weakly r-clean")
    ys = R.b["regular_y"]
    for r in np.flatnonzero(R.b["regular"]):
        run.scanned += 1
        r, y = int(r), int(ys[r])
        at = dict(r=ring.name(r), y=ring.name(y))
        run.claim(R.mul(r, y, r) == r, "r = ryr", **at)
        e = R.mul(y, r)
        run.claim(R.is_idem(e), "yr idempotent", **at)
        u = R.add(R.mul(r, e), R.comp(e))
        uinv = R.add(R.mul(y, e), R.comp(e))
        run.claim(R.mul(uinv, u) == R.one and R.mul(u, uinv) == R.one, "re+(1-e) unit", **at)
        run.claim(R.mul(u, e) == r, "r = (re+(1-e))e", **at)


def _c08(run, ring):
    c = _census(ring)
    run.need(c["abelian"], "abelian")
    R = _Ar(ring)
    run.claim(c["is_weakly_r_clean"] == c["is_weakly_exchange"], "weakly r-clean iff weakly exchange",
              weakly_r_clean=c["is_weakly_r_clean"], weakly_exchange=c["is_weakly_exchange"])
    run.claim(c["is_weakly_exchange"] == c["is_weakly_exchange_left"],
              "right- and left-sided weakly exchange agree on abelian rings")
    wc = _mask(ring, "weakly_clean")
    wx = _mask(ring, "weakly_exchange")
    wxl = _mask(ring, "weakly_exchange_left")
    u2, e2 = _pair(ring, "weakly_clean_t2")
    for x in ring.elements:
        run.scanned += 1
        if wc[x]:
            run.claim(wx[x] and wxl[x], "weakly clean element is weakly exchange", element=ring.name(x))
        if u2[x] >= 0:
            u, e = int(u2[x]), int(e2[x])
            f = R.mul(R.inverse(u), R.comp(e), u)
            run.claim(R.is_idem(f), "u^-1(1-e)u idempotent", element=ring.name(x))
            run.claim(R.mul(u, R.add(x, f)) == R.add(R.mul(x, x), x), "u(x+f) = x^2+x",
                      element=ring.name(x))


def _c09(run, base, endomorphism, length, ring=None):
    run.need(_census(base)["abelian"], "abelian base", ring=base.provenance)
    if ring is None:
        ring = truncated_skew_series(base, endomorphism, length)
    lhs = _census(base)["is_weakly_r_clean"]
    rhs = _census(ring)["is_weakly_r_clean"]
    coords = ring.meta["coords"]
    const = ring_map(ring, base, coords[:, 0], name="constant term")
    _, t, r, e = _weak(ring, "weakly_r_clean")
    reg_b = classify._basic(base)["regular"]
    B = _Ar(base)
    w = base.size ** np.arange(length)
    for b in base.elements:
        run.scanned += 1
        x = int(b * w[0] + base.zero * w[1:].sum())
        if t[x] == 0:
            continue
        rr, ee = const(r[x]), const(e[x])
        run.claim(reg_b[rr] and B.is_idem(ee), "constant terms of a decomposition decompose", element=base.name(b))
        run.claim((B.add(rr, ee) if t[x] == 1 else B.sub(rr, ee)) == b, "constant-term image", element=base.name(b))
    run.claim(lhs == rhs, "base weakly r-clean iff truncated skew series weakly r-clean",
              base=lhs, series=rhs)
    run.note(f"series approximated by truncation at t^{length}; quotient direction exact")


def _c10(run, ring, ideal):
    reg = is_regular_ideal(ring, ideal)
    run.need(reg.ok, "is_regular_ideal", element=None if reg.ok else ring.name(reg.witness))
    lift = idempotents_lift(ring, ideal)
    run.need(lift.ok, "idempotents_lift", element=None if lift.ok else ring.name(lift.witness))
    run.need(len(ideal) < ring.size, "proper ideal")
    quot, theta = quotient_ring(ring, ideal)
    lhs = _census(ring)["is_weakly_r_clean"]
    rhs = _census(quot)["is_weakly_r_clean"]
    run.claim(lhs == rhs, "R weakly r-clean iff R/I weakly r-clean", R=lhs, quotient=rhs)
    R = _Ar(ring)
    reg_r = R.b["regular"]
    idems = np.flatnonzero(R.b["idempotent"])
    lift_of = {}
    for e in idems:
        lift_of.setdefault(theta(e), int(e))
    _, t2e = _pair(quot, "weakly_r_clean_t2")
    for a in ring.elements:
        q = theta(a)
        run.scanned += 1
        if t2e[q] < 0:
            continue
        e_hat = lift_of.get(int(t2e[q]))
        run.claim(e_hat is not None, "idempotent coset lifts", element=ring.name(a))
        run.claim(reg_r[R.add(a, e_hat)], "a + lifted idempotent is regular in R",
                  element=ring.name(a), e=ring.name(e_hat))


def _c11(run, base, ring=None):
    if ring is None:
        ring = triangular_ring(base)
    c = _census(ring)
    run.need(c["is_weakly_r_clean"], "triangular ring weakly r-clean", element=c.witness("is_weakly_r_clean"))
    B = _Ar(base)
    coords = ring.meta["coords"]
    _, t, r, f = _weak(ring, "weakly_r_clean")
    reg = B.b["regular"]
    for x in ring.elements:
        run.scanned += 1
        a, _, b = coords[x]
        ra, _, rb = coords[r[x]]
        fa, _, fb = coords[f[x]]
        at = dict(element=ring.name(x))
        run.claim(B.is_idem(int(fa)) and B.is_idem(int(fb)), "diagonal of an idempotent is idempotent", **at)
        run.claim(reg[ra] and reg[rb], "diagonal of a regular element is regular", **at)
        op = B.add if t[x] == 1 else B.sub
        run.claim(op(int(ra), int(fa)) == a and op(int(rb), int(fb)) == b, "diagonal decomposition", **at)
    run.claim(_census(base)["is_weakly_r_clean"], "diagonal ring weakly r-clean")


def _c12(run, ring):
    c = _census(ring)
    run.need(c["trivial_idempotents_only"], "no nontrivial idempotents")
    run.need(c["is_weakly_r_clean"], "R weakly r-clean", element=c.witness("is_weakly_r_clean"))
    cen, inc = center(ring)
    central = classify._basic(ring)["central"]
    _, t, r, e = _weak(ring, "weakly_r_clean")
    for x in inc.image:
        run.scanned += 1
        run.claim(int(e[x]) in (ring.zero, ring.one), "idempotent part is 0 or 1", element=ring.name(x))
        run.claim(central[r[x]], "regular part of a central element is central", element=ring.name(x))
    run.claim(_census(cen)["is_weakly_r_clean"], "center weakly r-clean")
    run.note("noncommutative instance" if not c["commutative"] else "commutative instance (center = R)")


def _c13(run, grading):
    ring = grading.ring
    grading = grading_validate(ring, grading.parts)
    c = _census(ring)
    run.need(c["is_weakly_r_clean"], "R weakly r-clean", element=c.witness("is_weakly_r_clean"))
    r0, inc = grading.degree_zero_ring()
    index = {int(v): k for k, v in enumerate(inc.image)}
    reg0 = classify._basic(r0)["regular"]
    _, t, r, e = _weak(ring, "weakly_r_clean")
    outside = 0
    for x in inc.image:
        run.scanned += 1
        if int(e[x]) in index:
            run.claim(int(r[x]) in index, "regular part lies in degree 0", element=ring.name(x))
            run.claim(reg0[index[int(r[x])]], "regular in R and in G_0 implies regular in G_0",
                      element=ring.name(x))
        else:
            outside += 1
    if outside:
        run.note(f"{outside} degree-0 elements decompose with an idempotent outside G_0")
    run.claim(_census(r0)["is_weakly_r_clean"], "degree-zero part weakly r-clean")


# ---------------------------------------------------------------------------
# weakly g(x)-r-clean rings
# ---------------------------------------------------------------------------


def _c14(run, ring, ideal, poly):
    run.need(len(ideal) < ring.size, "proper ideal")
    c = _census(ring, g=poly)
    run.need(c["is_weakly_g_r_clean"], "R weakly g-r-clean", element=c.witness("is_weakly_g_r_clean"))
    quot, theta = quotient_ring(ring, ideal)
    g2 = CentralPolynomial(quot, tuple(theta(a) for a in poly.coeffs), f"theta({poly.text})")
    S = _Ar(quot)
    _, t, r, s0 = _weak(ring, "weakly_g_r_clean", g=poly)
    reg_s = classify._basic(quot)["regular"]
    for q, x in enumerate(quot.meta["reps"]):
        run.scanned += 1
        rr, ss = theta(r[x]), theta(s0[x])
        run.claim(reg_s[rr], "image of a regular element is regular", element=quot.name(q))
        run.claim(g2(ss) == quot.zero, "image of a root is a root of theta'(g)", element=quot.name(q))
        run.claim((S.add(rr, ss) if t[x] == 1 else S.sub(rr, ss)) == q, "image decomposition", element=quot.name(q))
    run.claim(_census(quot, g=g2)["is_weakly_g_r_clean"], "R/I weakly theta'(g)-r-clean")


def _c15(run, factors, int_poly, ring=None):
    run.need(len(factors) >= 2, "at least two factors")
    if ring is None:
        ring = direct_product(factors)
    ints = list(int_poly)
    g = integer_polynomial(ring, ints)
    gs = [integer_polynomial(f, ints) for f in factors]
    lhs = _census(ring, g=g)["is_weakly_g_r_clean"]
    not_g = [f.provenance for f, gf in zip(factors, gs) if not _census(f, g=gf)["is_g_r_clean"]]
    rhs = all(_census(f, g=gf)["is_weakly_g_r_clean"] for f, gf in zip(factors, gs)) and len(not_g) <= 1
    _product_bookkeeping(run, ring, factors, "weakly_g_r_clean_t1", "weakly_g_r_clean_t2", polys=gs + [g])
    run.claim(lhs == rhs, "product weakly g-r-clean iff factors weakly g-r-clean with at most one not g-r-clean",
              product=lhs, factors=rhs)
    if not not_g:
        run.note("clause 'at most one factor not g-r-clean' vacuous: every factor is g-r-clean")
    if rhs and not _census(ring, g=g)["is_g_r_clean"]:
        run.note("product is weakly but not g-r-clean: the non-weak reading of the left side fails here")


def _c16_grid(ring):
    central = [int(c) for c in np.flatnonzero(classify._basic(ring)["central"])]
    return [(a, b, n) for n in (1, 2) for a in central if a != ring.zero for b in central]


def _c16(run, ring, grid=None):
    grid = _c16_grid(ring) if grid is None else grid
    ids = np.arange(ring.size)
    neg = ring.neg
    for a, b, n in grid:
        run.scanned += 1
        minus = [ring.zero, int(neg[b])] + [ring.zero] * (2 * n - 2) + [a]
        plus = [ring.zero, b] + [ring.zero] * (2 * n - 2) + [a]
        gm = CentralPolynomial(ring, tuple(minus))
        gp = CentralPolynomial(ring, tuple(plus))
        rm = gm.evaluate(ids) == ring.zero
        rp = gp.evaluate(ids) == ring.zero
        at = dict(a=ring.name(a), b=ring.name(b), n=n)
        run.claim(np.array_equal(rp, rm[neg]), "roots of ax^2n+bx are negatives of roots of ax^2n-bx", **at)
        mm = weakly_g_r_clean_mask(ring, np.flatnonzero(rm))
        mp = weakly_g_r_clean_mask(ring, np.flatnonzero(rp))
        bad = _first_mismatch(mm, mp[neg])
        run.claim(bad is None, "x weakly (ax^2n-bx)-r-clean iff -x weakly (ax^2n+bx)-r-clean",
                  element=None if bad is None else ring.name(bad), **at)
        run.claim(mm.all() == mp.all(), "ring verdicts agree", **at)


def _c17(run, ring, n):
    run.need(n >= 2, "n >= 2")
    ids = np.arange(ring.size)
    p = np.full(ring.size, ring.one)
    for _ in range(n - 1):
        p = ring.mul[p, ids]
    T = np.flatnonzero(p == ring.one)
    pre = weakly_g_r_clean_mask(ring, T)
    run.need(pre.all(), f"every a = r +- t with t^{n - 1} = 1",
             element=ring.name(int(np.flatnonzero(~pre)[0])) if not pre.all() else None)
    g = _x_pow_minus_x(ring, n)
    roots = g.roots()
    for t in T:
        run.scanned += 1
        run.claim(int(t) in roots, "t^(n-1) = 1 implies t^n = t", t=ring.name(int(t)))
    run.claim(weakly_g_r_clean_mask(ring, sorted(roots)).all(), f"R weakly (x^{n}-x)-r-clean")


def _c18(run, ring, n, root=None):
    run.need(n >= 2, "n >= 2")
    R = _Ar(ring)
    g = _x_pow_minus_x(ring, n)
    roots = sorted(g.roots()) if root is None else [root]
    run.need(all(int(s) in g.roots() for s in roots), "e is a root of x^n - x")
    corners = sorted({R.pow(e, n - 1) for e in roots} - {ring.zero})
    run.need(bool(corners), "some root with e^(n-1) != 0")
    for E in corners:
        corner, inc = corner_ring(ring, E)
        cb = classify._basic(corner)
        gc = _x_pow_minus_x(corner, n)
        croots = sorted(gc.roots())
        one_minus = R.comp(E)
        for u in np.flatnonzero(cb["unit"]):
            U = inc(int(u))
            W = inc(int(cb["inverse"][u]))
            v = R.sub(U, one_minus)
            vinv = R.sub(W, one_minus)
            for f in croots:
                if corner.mul[u, f] != corner.mul[f, u]:
                    continue
                run.scanned += 1
                F = inc(f)
                a = R.add(U, F)
                s = R.add(F, one_minus)
                at = dict(E=ring.name(E), a=ring.name(a), u=ring.name(U), f=ring.name(F))
                run.claim(R.mul(v, vinv) == R.one and R.mul(vinv, v) == R.one, "u-(1-E) unit with inverse w-(1-E)", **at)
                run.claim(R.pow(s, n) == s, "(f+(1-E))^n = f+(1-E)", **at)
                run.claim(R.add(v, s) == a, "a = (u-(1-E)) + (f+(1-E))", **at)
                run.claim(R.mul(v, s) == R.mul(s, v), "unit and root commute", **at)


def _c19(run, ring, n):
    c = _census(ring)
    run.need(c["abelian"], "abelian")
    R = _Ar(ring)
    g = _x_pow_minus_x(ring, n)
    gu, gf = _pair(ring, "g_clean", g=g)
    gmask = gu >= 0
    roots = sorted(g.roots())
    Es = sorted({R.pow(e, n - 1) for e in roots})
    for a in np.flatnonzero(gmask):
        a = int(a)
        u, f = int(gu[a]), int(gf[a])
        for E in Es:
            run.scanned += 1
            aE = R.mul(a, E)
            at = dict(a=ring.name(a), E=ring.name(E))
            run.claim(gmask[aE], "a e^(n-1) g-clean", **at)
            v = R.sub(R.mul(u, E), R.comp(E))
            vinv = R.sub(R.mul(R.inverse(u), E), R.comp(E))
            s = R.add(R.mul(f, E), R.comp(E))
            run.claim(R.mul(v, vinv) == R.one, "uE-(1-E) unit", **at)
            run.claim(R.pow(s, n) == s, "fE+(1-E) root", **at)
            run.claim(R.add(v, s) == aE, "aE = unit + root", **at)


# ---------------------------------------------------------------------------
# rings with involution
# ---------------------------------------------------------------------------


def _c20(run, involution):
    ring = involution.ring
    c = _census(ring, involution)
    run.need(c["boolean"], "boolean")
    run.scanned += ring.size
    run.claim(c["is_weakly_star_clean"] == c["star_is_identity"], "weakly *-clean iff * is the identity",
              weakly_star_clean=c["is_weakly_star_clean"], identity=c["star_is_identity"],
              element=None if c["is_weakly_star_clean"] else ring.name(c.witness("is_weakly_star_clean")))


def _sqrt1_self_adjoint(inv):
    ring = inv.ring
    ids = np.arange(ring.size)
    sq = np.flatnonzero(ring.mul[ids, ids] == ring.one)
    bad = sq[inv.star[sq] != sq]
    return (True, None) if bad.size == 0 else (False, int(bad[0]))


def _c21(run, involution):
    ring = involution.ring
    c = _census(ring, involution)
    run.need(c["two_invertible"], "2 invertible")
    lhs, w = _sqrt1_self_adjoint(involution)
    rhs = c["idempotents_are_projections"]
    run.scanned += ring.size
    run.claim(lhs == rhs, "square roots of 1 self-adjoint iff every idempotent is a projection",
              sqrt1=lhs, projections=rhs, element=None if w is None else ring.name(w))


def _c22(run, involution):
    ring = involution.ring
    c = _census(ring, involution)
    run.need(c["two_invertible"], "2 invertible")
    lhs = c["is_weakly_clean"] and c["units_self_adjoint"]
    rhs = c["is_weakly_star_clean"] and c["star_is_identity"]
    run.scanned += ring.size
    run.claim(lhs == rhs, "(weakly clean, units self-adjoint) iff (weakly *-clean, * = 1)", left=lhs, right=rhs)


def _c23(run, involution):
    ring = involution.ring
    c = _census(ring, involution)
    R = _Ar(ring)
    lhs = c["is_weakly_star_clean"] and c["two_invertible"]
    rhs = c["is_sasr1_or_two_p_plus_one"]
    run.claim(lhs == rhs, "(weakly *-clean and 2 a unit) iff every element is unit + (sasr1 or 2p+1)",
              left=lhs, right=rhs, element=None if rhs else ring.name(c.witness("is_sasr1_or_two_p_plus_one")))
    if lhs:
        half = R.inverse(R.two())
        _, t, u, p = _weak(ring, "weakly_star_clean", inv=involution)
        for a in ring.elements:
            run.scanned += 1
            h = R.mul(R.sub(a, R.one), half)
            two_u = R.mul(R.two(), int(u[h]))
            two_p = R.mul(R.two(), int(p[h]))
            at = dict(element=ring.name(a))
            run.claim(R.is_unit(two_u), "2u unit", **at)
            if t[h] == 2:
                s = R.sub(R.one, two_p)
                run.claim(R.mul(s, s) == R.one and involution(s) == s, "1-2p self-adjoint square root of 1", **at)
                run.claim(R.add(two_u, s) == a, "a = 2u + (1-2p)", **at)
            else:
                run.claim(R.add(two_u, R.one, two_p) == a, "a = 2u + (2p+1)", **at)
    else:
        run.scanned += ring.size


def _c24(run, involution, ideal):
    ring = involution.ring
    c = _census(ring, involution)
    run.need(c["is_weakly_star_clean"], "R weakly *-clean", element=c.witness("is_weakly_star_clean"))
    run.need(is_star_invariant(involution, ideal), "*-invariant ideal",
             element=next((ring.name(i) for i in ideal.sorted() if int(involution.star[i]) not in ideal.members), None))
    run.need(len(ideal) < ring.size, "proper ideal")
    jac = jacobson_radical(ring)
    run.claim(is_star_invariant(involution, jac), "J(R) is *-invariant")
    for I in (ideal, jac):
        quot, _ = quotient_ring(ring, I)
        qinv = induced_involution(involution, quot)
        run.scanned += quot.size
        run.claim(_census(quot, qinv)["is_weakly_star_clean"], "R/I weakly *-clean",
                  ideal=[ring.name(i) for i in I.sorted()])


def _c25(run, involution, length):
    base = involution.ring
    key = ("series", length)
    if key not in base._cache:
        base._cache[key] = truncated_skew_series(base, identity_map(base), length)
    ring = base._cache[key]
    sinv = induced_involution(involution, ring)
    lhs = _census(base, involution)["is_weakly_star_clean"]
    rhs = _census(ring, sinv)["is_weakly_star_clean"]
    run.claim(lhs == rhs, "R[[t]] weakly *-clean iff R weakly *-clean (truncated)", base=lhs, series=rhs)
    if lhs:
        T = _Ar(ring)
        _, t, u, p = _weak(base, "weakly_star_clean", inv=involution)
        coords = ring.meta["coords"]
        w = base.size ** np.arange(length)
        proj_T = classify.flag_mask(ring, "projection", sinv)
        for x in ring.elements:
            run.scanned += 1
            a0 = int(coords[x, 0])
            pc = int(p[a0] + base.zero * w[1:].sum())
            at = dict(element=ring.name(x))
            run.claim(proj_T[pc], "projection of R is a projection of R[[t]]", **at)
            rest = T.sub(x, pc) if t[a0] == 1 else T.add(x, pc)
            run.claim(T.is_unit(rest), "series with unit constant term is a unit", **at)
    run.note(f"series approximated by truncation at t^{length}; quotient direction exact")


def _c26(run, involution, map, target_involution):
    ring = involution.ring
    theta = map
    quot = theta.target
    run.need(theta.source is ring and target_involution.ring is quot, "map between the involution rings")
    run.need(theta.is_surjective(), "surjective")
    bad = np.flatnonzero(theta.image[involution.star] != target_involution.star[theta.image])
    run.need(bad.size == 0, "map preserves *", element=ring.name(int(bad[0])) if bad.size else None)
    c = _census(ring, involution)
    run.need(c["is_weakly_star_clean"], "R weakly *-clean", element=c.witness("is_weakly_star_clean"))
    S = _Ar(quot)
    proj_s = classify.flag_mask(quot, "projection", target_involution)
    _, t, u, p = _weak(ring, "weakly_star_clean", inv=involution)
    pre = {}
    for x in ring.elements:
        pre.setdefault(theta(x), x)
    for s, x in sorted(pre.items()):
        run.scanned += 1
        uu, pp = theta(u[x]), theta(p[x])
        at = dict(element=quot.name(s))
        run.claim(S.is_unit(uu), "image of a unit is a unit", **at)
        run.claim(proj_s[pp], "image of a projection is a projection", **at)
        run.claim((S.add(uu, pp) if t[x] == 1 else S.sub(uu, pp)) == s, "image decomposition", **at)
    run.claim(_census(quot, target_involution)["is_weakly_star_clean"], "image weakly *-clean")


def _c27(run, star_factors, ring=None, involution=None):
    run.need(len(star_factors) >= 2, "at least two factors")
    factors = [inv.ring for inv in star_factors]
    if ring is None:
        ring = direct_product(factors)
    if involution is None:
        involution = product_involution(ring, star_factors)
    lhs = _census(ring, involution)["is_weakly_star_clean"]
    cs = [_census(inv.ring, inv) for inv in star_factors]
    not_star = [c.ring for c in cs if not c["is_star_clean"]]
    rhs = all(c["is_weakly_star_clean"] for c in cs) and len(not_star) <= 1
    _product_bookkeeping(run, ring, factors, "weakly_star_clean_t1", "weakly_star_clean_t2",
                         invs=list(star_factors) + [involution])
    run.claim(lhs == rhs, "product weakly *-clean iff factors weakly *-clean with at most one not *-clean",
              product=lhs, factors=rhs)
    if not not_star:
        run.note("clause 'at most one factor not *-clean' vacuous")
    elif len(not_star) >= 2:
        run.note("clause exercised: two factors not *-clean")


def _c28(run, involution, projection=None):
    ring = involution.ring
    R = _Ar(ring)
    P = sorted(classify._star(involution)["P"].tolist())
    if projection is not None:
        run.need(projection in P, "e is a projection", element=ring.name(projection))
        P = [projection]
    P = [e for e in P if e != ring.zero]
    for e in P:
        corner, inc = corner_ring(ring, e)
        cinv = restrict_to_corner(involution, corner, inc)
        cb = classify._basic(corner)
        cP = sorted(classify._star(cinv)["P"].tolist())
        proj_R = classify._star(involution)["projection"]
        one_minus = R.comp(e)
        for v in np.flatnonzero(cb["unit"]):
            V = inc(int(v))
            W = inc(int(cb["inverse"][v]))
            lv = R.sub(V, one_minus)
            lw = R.sub(W, one_minus)
            for f in cP:
                if corner.mul[v, f] != corner.mul[f, v]:
                    continue
                run.scanned += 1
                F = inc(f)
                a = R.add(F, V)
                q = R.add(F, one_minus)
                at = dict(e=ring.name(e), a=ring.name(a))
                run.claim(R.mul(lv, lw) == R.one and R.mul(lw, lv) == R.one, "v-(1-e) unit with inverse w-(1-e)", **at)
                run.claim(proj_R[q], "f+(1-e) projection", **at)
                run.claim(R.add(lv, q) == a, "a = (v-(1-e)) + (f+(1-e))", **at)
                run.claim(R.mul(lv, q) == R.mul(q, lv), "unit and projection commute", **at)


def _c29(run, involution):
    ring = involution.ring
    run.need(_census(ring, involution)["abelian"], "abelian")
    R = _Ar(ring)
    su, sp = _pair(ring, "star_clean", inv=involution)
    smask = su >= 0
    star = classify._star(involution)
    P = star["P"].tolist()
    for a in np.flatnonzero(smask):
        a = int(a)
        u, p1 = int(su[a]), int(sp[a])
        for e in P:
            run.scanned += 1
            ae = R.mul(a, e)
            at = dict(a=ring.name(a), e=ring.name(e))
            run.claim(smask[ae], "ae *-clean", **at)
            v = R.sub(R.mul(u, e), R.comp(e))
            vinv = R.sub(R.mul(R.inverse(u), e), R.comp(e))
            q = R.add(R.mul(p1, e), R.comp(e))
            run.claim(R.mul(v, vinv) == R.one, "ue-(1-e) unit", **at)
            run.claim(star["projection"][q], "p1 e + (1-e) projection", **at)
            run.claim(R.add(v, q) == ae, "ae = unit + projection", **at)


def _c30(run, involution):
    ring = involution.ring
    run.need(_census(ring, involution)["abelian"], "abelian")
    R = _Ar(ring)
    su, sp = _pair(ring, "star_clean", inv=involution)
    smask = su >= 0
    star = classify._star(involution)
    P = star["P"].tolist()
    eligible = [a for a in ring.elements if smask[a] and smask[R.neg(a)]]
    run.need(bool(eligible), "some a with a and -a *-clean")
    for a in eligible:
        u, f = int(su[a]), int(sp[a])
        na = R.neg(a)
        # 1 + a = -u' + (1 - f') from -a = u' + f'
        v, g = R.neg(int(su[na])), R.comp(int(sp[na]))
        for e in P:
            run.scanned += 1
            at = dict(a=ring.name(a), e=ring.name(e))
            run.claim(smask[R.add(a, e)], "a+e *-clean", **at)
            unit = R.add(R.mul(v, e), R.mul(u, R.comp(e)))
            proj = R.add(R.mul(g, e), R.mul(f, R.comp(e)))
            run.claim(R.is_unit(unit), "ve + u(1-e) unit", **at)
            run.claim(star["projection"][proj], "ge + f(1-e) projection", **at)
            run.claim(R.add(unit, proj) == R.add(a, e), "a+e = unit + projection", **at)


def _regular_idempotents_are_projections(involution):
    """Every idempotent of the form ry or yr (r regular) is a projection; witness (r, y)."""
    ring = involution.ring
    b = classify._basic(ring)
    star = classify._star(involution)
    bad = b["idempotent"] & ~star["projection"]
    regs = np.flatnonzero(b["regular"])
    for table in (ring.mul[regs, :], ring.mul[:, regs].T):
        hit = np.argwhere(bad[table])
        if hit.size:
            r, y = hit[0]
            return False, (int(regs[r]), int(y))
    return True, None


def _c31(run, involution):
    ring = involution.ring
    run.need(_census(ring, involution)["abelian"], "abelian")
    ok, w = _regular_idempotents_are_projections(involution)
    run.need(ok, "idempotents ry, yr are projections",
             r=None if ok else ring.name(w[0]), y=None if ok else ring.name(w[1]))
    R = _Ar(ring)
    smask = _mask(ring, "star_clean", inv=involution)
    proj = classify._star(involution)["projection"]
    ys = R.b["regular_y"]
    for r in np.flatnonzero(R.b["regular"]):
        run.scanned += 1
        r = int(r)
        y = int(ys[r])
        at = dict(r=ring.name(r), y=ring.name(y))
        run.claim(smask[r], "regular element *-clean", **at)
        run.claim(R.mul(r, y, r) == r, "r = ryr", **at)
        f = R.mul(y, r)
        e = R.add(f, R.mul(R.comp(f), r, f))
        run.claim(R.is_idem(e) and proj[e], "e = f + (1-f)rf projection", **at)
        run.claim(R.comp(e) == R.mul(R.comp(f), R.comp(r)), "1-e = (1-f)(1-r)", **at)
        run.claim(R.is_unit(R.sub(r, R.comp(e))), "r-(1-e) unit", **at)


def _c32(run, involution):
    ring = involution.ring
    c = _census(ring, involution)
    run.need(c["abelian"], "abelian")
    ok, w = _regular_idempotents_are_projections(involution)
    run.need(ok, "idempotents ry, yr are projections",
             r=None if ok else ring.name(w[0]), y=None if ok else ring.name(w[1]))
    sr = _mask(ring, "star_r_clean", inv=involution)
    sc = _mask(ring, "star_clean", inv=involution)
    for x in ring.elements:
        run.scanned += 1
        if sr[x]:
            run.claim(sc[x], "*-r-clean element is *-clean", element=ring.name(x))
    run.claim(c["is_star_r_clean"] == c["is_star_clean"], "*-r-clean iff *-clean")


def _c33(run, involution):
    ring = involution.ring
    R = _Ar(ring)
    wsc = _mask(ring, "weakly_star_clean", inv=involution)
    proj = classify._star(involution)["projection"]
    run.claim(proj[ring.zero] and proj[ring.one], "0 and 1 are projections")
    b = R.b
    for x in ring.elements:
        if b["unit"][x]:
            run.scanned += 1
            run.claim(wsc[x], "unit weakly *-clean (u = u + 0)", element=ring.name(x))
        if b["jacobson"][x] or b["nilpotent"][x]:
            run.scanned += 1
            at = dict(element=ring.name(x))
            run.claim(R.is_unit(R.sub(x, R.one)), "x - 1 unit for x in J(R) or Nil(R)", **at)
            run.claim(wsc[x], "x = (x-1) + 1 weakly *-clean", **at)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    statement: str
    required: tuple
    optional: tuple
    func: object


_CATALOG = [
    ("C01", "quotients of weakly r-clean rings are weakly r-clean", ("ring", "ideal"), (), _c01),
    ("C02", "product weakly r-clean iff factors weakly r-clean, at most one not r-clean", ("factors",), ("ring",), _c02),
    ("C03", "without zero divisors: weakly clean iff weakly r-clean", ("ring",), (), _c03),
    ("C04", "a = u - f in eRe lifts to a = v - e' in R with v = u+(1-e), e' = f+(1-e)", ("ring",), ("idempotent",), _c04),
    ("C05", "abelian: a weakly clean implies ae weakly clean", ("ring",), (), _c05),
    ("C06", "abelian, a and -a clean: a+e clean and a-e weakly clean", ("ring",), (), _c06),
    ("C07", "abelian: weakly clean iff weakly r-clean", ("ring",), (), _c07),
    ("C08", "abelian: weakly r-clean iff weakly exchange", ("ring",), (), _c08),
    ("C09", "abelian: R weakly r-clean iff R[[t;alpha]] weakly r-clean", ("base", "endomorphism", "length"), ("ring",), _c09),
    ("C10", "I regular with lifting idempotents: R weakly r-clean iff R/I is", ("ring", "ideal"), (), _c10),
    ("C11", "triangular ring weakly r-clean implies diagonal rings weakly r-clean", ("base",), ("ring",), _c11),
    ("C12", "trivial idempotents: center of a weakly r-clean ring is weakly r-clean", ("ring",), (), _c12),
    ("C13", "graded: R weakly r-clean implies R_0 weakly r-clean", ("grading",), (), _c13),
    ("C14", "epimorphic images of weakly g-r-clean rings are weakly theta'(g)-r-clean", ("ring", "ideal", "poly"), (), _c14),
    ("C15", "product weakly g-r-clean iff factors are, at most one not g-r-clean", ("factors", "int_poly"), ("ring",), _c15),
    ("C16", "weakly (ax^2n-bx)-r-clean iff weakly (ax^2n+bx)-r-clean", ("ring",), ("grid",), _c16),
    ("C17", "every a = r +- t with t^(n-1)=1 implies weakly (x^n-x)-r-clean", ("ring", "n"), (), _c17),
    ("C18", "strongly (x^n-x)-clean in e^(n-1)Re^(n-1) lifts to R", ("ring", "n"), ("root",), _c18),
    ("C19", "abelian: a (x^n-x)-clean implies a e^(n-1) (x^n-x)-clean", ("ring", "n"), (), _c19),
    ("C20", "boolean *-ring: weakly *-clean iff * is the identity", ("involution",), (), _c20),
    ("C21", "2 invertible: square roots of 1 self-adjoint iff idempotents are projections", ("involution",), (), _c21),
    ("C22", "2 invertible: weakly clean with self-adjoint units iff weakly *-clean with * = 1", ("involution",), (), _c22),
    ("C23", "weakly *-clean with 2 a unit iff unit + (self-adjoint root of 1 or 2p+1)", ("involution",), (), _c23),
    ("C24", "quotients by *-invariant ideals of weakly *-clean rings are weakly *-clean", ("involution", "ideal"), (), _c24),
    ("C25", "R[[t]] weakly *-clean iff R weakly *-clean", ("involution", "length"), (), _c25),
    ("C26", "*-preserving epimorphic images of weakly *-clean rings are weakly *-clean",
     ("involution", "map", "target_involution"), (), _c26),
    ("C27", "product weakly *-clean iff factors are, at most one not *-clean", ("star_factors",), ("ring", "involution"), _c27),
    ("C28", "strongly *-clean in eRe (e a projection) lifts to R", ("involution",), ("projection",), _c28),
    ("C29", "abelian *-ring: a *-clean implies ae *-clean for projections e", ("involution",), (), _c29),
    ("C30", "abelian *-ring: a, -a *-clean implies a+e *-clean", ("involution",), (), _c30),
    ("C31", "abelian, idempotents ry/yr projections: regular elements are *-clean", ("involution",), (), _c31),
    ("C32", "abelian, idempotents ry/yr projections: *-r-clean iff *-clean", ("involution",), (), _c32),
    ("C33", "units, J(R) and nilpotents are weakly *-clean", ("involution",), (), _c33),
]
CATALOG = {cid: CheckSpec(cid, stmt, req, opt, fn) for cid, stmt, req, opt, fn in _CATALOG}
CHECK_IDS = tuple(CATALOG)


def _describe(inputs):
    parts = []
    for key, value in inputs.items():
        if hasattr(value, "provenance"):
            parts.append(f"{key}={value.provenance}")
        elif key == "ideal":
            parts.append("ideal={" + ",".join(value.ring.name(i) for i in value.sorted()) + "}")
        elif key in ("factors", "star_factors"):
            parts.append(f"{key}=[" + ",".join(v.provenance for v in value) + "]")
        elif key == "map":
            parts.append(f"map={value.name or 'map'}:{value.source.provenance}->{value.target.provenance}")
        elif key == "grading":
            parts.append(f"grading={value.ring.provenance}/" + "|".join(str(len(p)) for p in value.parts))
        elif key == "poly":
            parts.append(f"g={value.text}")
        elif key == "grid":
            parts.append(f"grid={len(value)} polys")
        else:
            parts.append(f"{key}={value}")
    return "; ".join(parts)


def run_check(check_id, **inputs):
    """Run one catalog check on explicit inputs and return its report."""
    spec = CATALOG.get(check_id)
    if spec is None:
        raise UnknownCheck(f"unknown check {check_id!r}")
    missing = [k for k in spec.required if k not in inputs]
    extra = [k for k in inputs if k not in spec.required + spec.optional]
    if missing or extra:
        raise ArityMismatch(f"{check_id} takes {spec.required} (+{spec.optional}); "
                            f"missing {missing}, unexpected {extra}")
    run = _Run()
    start = time.perf_counter()
    status, witness = VERIFIED, None
    try:
        spec.func(run, **inputs)
    except _Stop as stop:
        status = stop.status
        witness = {"reason": stop.reason}
        witness.update({k: _plain_value(v) for k, v in stop.witness.items()})
    report = CheckReport(
        check_id=check_id, statement=spec.statement,
        inputs=_describe(inputs),
        status=status, witness=witness,
        notes=[n for n in run.notes if n], elapsed=time.perf_counter() - start, scanned=run.scanned,
    )
    return report


def _plain_value(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.bool_,)):
        return bool(v)
    return v


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

SMALL = 36
MEDIUM = 81


def _star_invariant_ideals(inv):
    ring = inv.ring
    return [I for I in principal_ideals(ring)
            if 1 < len(I) < ring.size and is_star_invariant(inv, I)]


def _proper_ideals(ring):
    return [I for I in principal_ideals(ring) if 1 < len(I) < ring.size]


def natural_gradings(ring):
    """Gradings known from the constructor: monomial degree or matrix position."""
    kind = ring.meta.get("kind")
    coords = ring.meta.get("coords")
    out = [[set(ring.elements)]]
    if kind == "trunc" or (kind == "polyq" and all(c == 0 for c in ring.meta["f"][:-1])):
        base_zero = ring.meta["base"].zero if kind == "trunc" else 0
        d = coords.shape[1]
        parts = []
        for k in range(d):
            others = np.delete(coords, k, axis=1)
            parts.append({int(i) for i in np.flatnonzero((others == base_zero).all(axis=1))})
        out.append(parts)
    elif kind == "triangular":
        z = ring.meta["base"].zero
        diag = {int(i) for i in np.flatnonzero(coords[:, 1] == z)}
        off = {int(i) for i in np.flatnonzero((coords[:, 0] == z) & (coords[:, 2] == z))}
        out.append([diag, off])
    gradings = []
    for parts in out:
        try:
            gradings.append(grading_validate(ring, parts))
        except Exception:  # noqa: BLE001 - a constructor grading that fails is skipped
            continue
    return gradings


def suite_inputs(check_id, corpus):
    """Deterministic ``(kwargs)`` instances of one check over a corpus."""
    for entry in corpus:
        ring = entry.ring
        n = ring.size
        kind = ring.meta.get("kind")
        invs = list(entry.involutions)
        if check_id in ("C03", "C05", "C06", "C07", "C08", "C12"):
            yield {"ring": ring}
        elif check_id == "C04" and n <= MEDIUM:
            yield {"ring": ring}
        elif check_id in ("C01", "C10") and n <= SMALL:
            for I in _proper_ideals(ring):
                yield {"ring": ring, "ideal": I}
        elif check_id == "C14" and n <= SMALL:
            for I in _proper_ideals(ring):
                for g in entry.polynomials:
                    yield {"ring": ring, "ideal": I, "poly": g}
        elif check_id == "C02" and kind == "product":
            yield {"factors": list(ring.meta["factors"]), "ring": ring}
        elif check_id == "C15" and kind == "product":
            for g in entry.polynomials:
                if g.int_coeffs is not None:
                    yield {"factors": list(ring.meta["factors"]), "int_poly": list(g.int_coeffs), "ring": ring}
        elif check_id == "C09" and kind == "trunc":
            m = ring.meta
            yield {"base": m["base"], "endomorphism": m["alpha"], "length": m["length"], "ring": ring}
        elif check_id == "C11" and kind == "triangular":
            yield {"base": ring.meta["base"], "ring": ring}
        elif check_id == "C13":
            for gr in natural_gradings(ring):
                yield {"grading": gr}
        elif check_id == "C16" and n <= SMALL:
            yield {"ring": ring}
        elif check_id == "C17" and n <= 64:
            for k in (2, 3, 4):
                yield {"ring": ring, "n": k}
        elif check_id == "C18" and n <= MEDIUM:
            for k in (2, 3):
                yield {"ring": ring, "n": k}
        elif check_id == "C19":
            for k in (2, 3):
                yield {"ring": ring, "n": k}
        elif check_id in ("C20", "C21", "C22", "C23", "C29", "C30", "C31", "C32", "C33"):
            for inv in invs:
                yield {"involution": inv}
        elif check_id == "C28" and n <= MEDIUM:
            for inv in invs:
                yield {"involution": inv}
        elif check_id == "C24" and n <= SMALL:
            for inv in invs:
                for I in _star_invariant_ideals(inv):
                    yield {"involution": inv, "ideal": I}
        elif check_id == "C25":
            for inv in invs:
                if n <= 16:
                    yield {"involution": inv, "length": 2}
                if n <= 4:
                    yield {"involution": inv, "length": 3}
        elif check_id == "C26":
            for inv in invs:
                if n <= SMALL:
                    for I in _star_invariant_ideals(inv):
                        quot, theta = quotient_ring(ring, I)
                        yield {"involution": inv, "map": theta,
                               "target_involution": induced_involution(inv, quot)}
                if inv.components:
                    coords = ring.meta["coords"]
                    for k, comp in enumerate(inv.components):
                        theta = ring_map(ring, comp.ring, coords[:, k], name=f"pr{k + 1}")
                        yield {"involution": inv, "map": theta, "target_involution": comp}
        elif check_id == "C27":
            for inv in invs:
                if inv.components:
                    yield {"star_factors": list(inv.components), "ring": ring, "involution": inv}


def run_suite(corpus, checks=None):
    """Run every applicable (check, input) pairing, catalog order first."""
    corpus = list(corpus)
    if not corpus:
        raise ValueError("corpus is empty")
    checks = CHECK_IDS if checks is None else tuple(checks)
    for cid in checks:
        if cid not in CATALOG:
            raise UnknownCheck(f"unknown check {cid!r}")
    reports = []
    for cid in checks:
        for inputs in suite_inputs(cid, corpus):
            reports.append(run_check(cid, **inputs))
    return reports


def summarize(reports):
    """Status counts overall and per check."""
    total = {s: 0 for s in STATUSES}
    per = {}
    for r in reports:
        total[r.status] += 1
        per.setdefault(r.check_id, {s: 0 for s in STATUSES})[r.status] += 1
    return {"total": total, "per_check": per}
