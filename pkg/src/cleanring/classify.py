"""Element- and ring-level decomposition properties, decided exhaustively.

Everything here is computed once per ring (or per ring + involution, ring +
polynomial) as whole-ring boolean masks and witness arrays; element
profiles and censuses are views of those arrays.  Witnesses are the
lexicographically smallest ``(first, second)`` id pair.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field

import numpy as np

from .polynomial import format_polynomial, parse_polynomial

PLAIN_FLAGS = (
    "unit", "idempotent", "regular", "nilpotent", "central", "jacobson",
    "clean", "weakly_clean_t1", "weakly_clean_t2", "weakly_clean",
    "r_clean", "weakly_r_clean_t1", "weakly_r_clean_t2", "weakly_r_clean",
    "strongly_clean",
    "exchange", "weakly_exchange", "exchange_left", "weakly_exchange_left",
)
STAR_FLAGS = (
    "projection", "self_adjoint",
    "star_clean", "weakly_star_clean_t1", "weakly_star_clean_t2", "weakly_star_clean",
    "star_r_clean", "strongly_star_clean", "sasr1_decomp", "two_p_plus_one_decomp",
)
G_FLAGS = (
    "g_root", "g_clean", "strongly_g_clean", "g_r_clean",
    "weakly_g_r_clean_t1", "weakly_g_r_clean_t2", "weakly_g_r_clean",
)
ELEMENT_FLAGS = PLAIN_FLAGS + STAR_FLAGS + G_FLAGS

# ring-level flag -> element flag it is the conjunction of
RING_CONJUNCTIONS = {
    "is_clean": "clean",
    "is_weakly_clean": "weakly_clean",
    "is_r_clean": "r_clean",
    "is_weakly_r_clean": "weakly_r_clean",
    "is_strongly_clean": "strongly_clean",
    "is_exchange": "exchange",
    "is_weakly_exchange": "weakly_exchange",
    "is_exchange_left": "exchange_left",
    "is_weakly_exchange_left": "weakly_exchange_left",
    "is_star_clean": "star_clean",
    "is_weakly_star_clean": "weakly_star_clean",
    "is_star_r_clean": "star_r_clean",
    "is_strongly_star_clean": "strongly_star_clean",
    "is_sasr1_or_two_p_plus_one": "sasr1_or_two_p_plus_one",
    "is_g_clean": "g_clean",
    "is_strongly_g_clean": "strongly_g_clean",
    "is_g_r_clean": "g_r_clean",
    "is_weakly_g_r_clean": "weakly_g_r_clean",
}
STRUCTURE_FLAGS = (
    "commutative", "abelian", "boolean", "no_zero_divisors", "two_invertible",
    "trivial_idempotents_only",
)
STAR_STRUCTURE_FLAGS = ("star_is_identity", "idempotents_are_projections", "units_self_adjoint")
RING_FLAGS = STRUCTURE_FLAGS + STAR_STRUCTURE_FLAGS + tuple(RING_CONJUNCTIONS)

_STAR_CACHE = weakref.WeakKeyDictionary()
_G_CACHE = weakref.WeakKeyDictionary()


# -- polynomials with central coefficients ----------------------------------


@dataclass(frozen=True, eq=False)
class CentralPolynomial:
    """``g(x)`` with coefficients (constant first) in the center of ``ring``."""

    ring: object
    coeffs: tuple
    text: str = ""
    int_coeffs: tuple = field(default=None, compare=False)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        return int(self.evaluate(np.array([x]))[0])

    def evaluate(self, xs):
        ring = self.ring
        val = np.full(len(xs), self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            val = ring.add[ring.mul[val, xs], c]
        return val

    def roots(self):
        ids = np.arange(self.ring.size)
        return frozenset(int(s) for s in np.flatnonzero(self.evaluate(ids) == self.ring.zero))

    def __repr__(self):
        return f"CentralPolynomial({self.text or self.coeffs} over {self.ring.provenance})"


def central_polynomial(ring, coeffs, text=""):
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) < 2:
        raise ValueError("g must have degree >= 1")
    if coeffs[-1] == ring.zero:
        raise ValueError("leading coefficient of g is zero")
    central = _basic(ring)["central"]
    for c in coeffs:
        if not central[c]:
            raise ValueError(f"coefficient {ring.name(c)} is not central")
    if not text:
        text = " + ".join(f"{ring.name(c)}*x^{k}" for k, c in enumerate(coeffs) if c != ring.zero)
    return CentralPolynomial(ring, coeffs, text)


def integer_polynomial(ring, ints, text=None):
    """Reduce an integer coefficient list into ``ring`` via ``k -> k*1``."""
    coeffs = [ring.multiple(k) for k in ints]
    while len(coeffs) > 1 and coeffs[-1] == ring.zero:
        coeffs.pop()
        ints = ints[:-1]
    poly = central_polynomial(ring, coeffs, text or format_polynomial(list(ints)))
    return CentralPolynomial(ring, poly.coeffs, poly.text, tuple(ints))


def parse_central_polynomial(ring, text):
    return integer_polynomial(ring, parse_polynomial(text), text.replace(" ", ""))


def idempotent_polynomial(ring):
    """``x^2 - x``."""
    return integer_polynomial(ring, [0, -1, 1])


# -- whole-ring arrays --------------------------------------------------------


def regular_witnesses(ring):
    """Mask of von Neumann regular elements and the least ``y`` with ``x = xyx``."""
    n = ring.size
    ids = np.arange(n)
    xyx = ring.mul[ring.mul, ids[:, None]]
    hit = xyx == ids[:, None]
    mask = hit.any(axis=1)
    return mask, np.where(mask, hit.argmax(axis=1), -1)


def _basic(ring):
    if "basic" in ring._cache:
        return ring._cache["basic"]
    n = ring.size
    ids = np.arange(n)
    mul = ring.mul
    left = mul == ring.one
    two_sided = left & left.T
    units = two_sided.any(axis=1)
    inverse = np.where(units, two_sided.argmax(axis=1), -1)
    idem = mul[ids, ids] == ids
    regular, reg_y = regular_witnesses(ring)
    nil_index = np.full(n, -1)
    p = ids.copy()
    for k in range(1, n + 1):
        newly = (p == ring.zero) & (nil_index < 0)
        nil_index[newly] = k
        p = mul[p, ids]
    central = (mul == mul.T).all(axis=0)
    jac = units[ring.sub[ring.one][mul]].all(axis=0)
    out = {
        "unit": units, "inverse": inverse, "idempotent": idem,
        "regular": regular, "regular_y": reg_y,
        "nilpotent": nil_index > 0, "nil_index": nil_index,
        "central": central, "jacobson": jac,
    }
    ring._cache["basic"] = out
    return out


@dataclass(frozen=True)
class BasicSets:
    units: frozenset
    idempotents: frozenset
    regulars: frozenset
    nilpotents: frozenset
    central: frozenset
    jacobson: frozenset


def _ids(mask):
    return frozenset(int(i) for i in np.flatnonzero(mask))


def basic_sets(ring):
    b = _basic(ring)
    return BasicSets(
        _ids(b["unit"]), _ids(b["idempotent"]), _ids(b["regular"]),
        _ids(b["nilpotent"]), _ids(b["central"]), _ids(b["jacobson"]),
    )


def decompose(ring, first_mask, second_ids, sign=1, commuting=False):
    """For every ``x`` find the least ``a`` with ``x = a + sign*b``.

    ``a`` ranges over ``first_mask``, ``b`` over ``second_ids``.  Returns
    arrays ``(a, b)`` with -1 where no decomposition exists.
    """
    n = ring.size
    second = np.array(sorted(second_ids), dtype=np.int64)
    none = np.full(n, -1)
    if second.size == 0:
        return none, none.copy()
    table = ring.sub if sign > 0 else ring.add
    cand = table[:, second]
    ok = first_mask[cand]
    if commuting:
        ok &= ring.mul[cand, second[None, :]] == ring.mul[second[None, :], cand]
    big = np.where(ok, cand, n)
    k = big.argmin(axis=1)
    a = big[np.arange(n), k]
    found = a < n
    return np.where(found, a, -1), np.where(found, second[k], -1)


def _combine(t1, t2):
    """Weak notion from its two types; witness tagged with the type used."""
    m1 = t1[0] >= 0
    m2 = t2[0] >= 0
    return m1 | m2, (np.where(m1, 1, np.where(m2, 2, 0)),
                     np.where(m1, t1[0], t2[0]), np.where(m1, t1[1], t2[1]))


def _exchange(ring, idem):
    n = ring.size
    ids = np.arange(n)
    right = np.zeros((n, n), dtype=bool)
    right[ids[:, None], ring.mul] = True          # right[x, y]: y in xR
    left = np.zeros((n, n), dtype=bool)
    left[ids[:, None], ring.mul.T] = True         # left[x, y]: y in Rx
    E = np.flatnonzero(idem)
    one_minus_e = ring.sub[ring.one, E]
    one_minus_x = ring.sub[ring.one, ids]
    one_plus_x = ring.add[ring.one, ids]
    out = {}
    for side, mult in (("", right), ("_left", left)):
        in_x = mult[:, E]
        b1 = in_x & mult[one_minus_x[:, None], one_minus_e[None, :]]
        b2 = in_x & mult[one_plus_x[:, None], one_minus_e[None, :]]
        for flag, ok in ((f"exchange{side}", b1), (f"weakly_exchange{side}", b1 | b2)):
            has = ok.any(axis=1)
            e = np.where(has, E[ok.argmax(axis=1)], -1)
            branch = np.where(has & b1[ids, ok.argmax(axis=1)], 1, np.where(has, 2, 0))
            out[flag] = (has, e, branch)
    return out


def _plain(ring):
    if "plain" in ring._cache:
        return ring._cache["plain"]
    b = _basic(ring)
    idem_ids = np.flatnonzero(b["idempotent"])
    clean = decompose(ring, b["unit"], idem_ids, 1)
    wc2 = decompose(ring, b["unit"], idem_ids, -1)
    rclean = decompose(ring, b["regular"], idem_ids, 1)
    wr2 = decompose(ring, b["regular"], idem_ids, -1)
    strong = decompose(ring, b["unit"], idem_ids, 1, commuting=True)
    out = {
        "clean": clean, "weakly_clean_t1": clean, "weakly_clean_t2": wc2,
        "r_clean": rclean, "weakly_r_clean_t1": rclean, "weakly_r_clean_t2": wr2,
        "strongly_clean": strong,
    }
    out["weakly_clean"] = _combine(clean, wc2)
    out["weakly_r_clean"] = _combine(rclean, wr2)
    out.update(_exchange(ring, b["idempotent"]))
    ring._cache["plain"] = out
    return out


def _star(inv):
    if inv in _STAR_CACHE:
        return _STAR_CACHE[inv]
    ring = inv.ring
    n = ring.size
    ids = np.arange(n)
    b = _basic(ring)
    proj_mask = b["idempotent"] & (inv.star == ids)
    P = np.flatnonzero(proj_mask)
    sc = decompose(ring, b["unit"], P, 1)
    wsc2 = decompose(ring, b["unit"], P, -1)
    sqrt1 = np.flatnonzero((ring.mul[ids, ids] == ring.one) & (inv.star == ids))
    two_p1 = ring.add[ring.add[P, P], ring.one]
    vals, first = np.unique(two_p1, return_index=True)
    tp_u, tp_v = decompose(ring, b["unit"], vals, 1)
    back = dict(zip(vals.tolist(), P[first].tolist()))
    tp_p = np.array([back.get(int(v), -1) for v in tp_v])
    sasr = decompose(ring, b["unit"], sqrt1, 1)
    out = {
        "projection": proj_mask,
        "self_adjoint": inv.star == ids,
        "P": P,
        "star_clean": sc, "weakly_star_clean_t1": sc, "weakly_star_clean_t2": wsc2,
        "star_r_clean": decompose(ring, b["regular"], P, 1),
        "strongly_star_clean": decompose(ring, b["unit"], P, 1, commuting=True),
        "sasr1_decomp": sasr,
        "two_p_plus_one_decomp": (tp_u, tp_p),
    }
    out["weakly_star_clean"] = _combine(sc, wsc2)
    out["sasr1_or_two_p_plus_one"] = (sasr[0] >= 0) | (tp_u >= 0)
    _STAR_CACHE[inv] = out
    return out


def _g(g):
    if g in _G_CACHE:
        return _G_CACHE[g]
    ring = g.ring
    b = _basic(ring)
    ids = np.arange(ring.size)
    root_mask = g.evaluate(ids) == ring.zero
    roots = np.flatnonzero(root_mask)
    gr1 = decompose(ring, b["regular"], roots, 1)
    gr2 = decompose(ring, b["regular"], roots, -1)
    out = {
        "g_root": root_mask,
        "roots": roots,
        "g_clean": decompose(ring, b["unit"], roots, 1),
        "strongly_g_clean": decompose(ring, b["unit"], roots, 1, commuting=True),
        "g_r_clean": gr1, "weakly_g_r_clean_t1": gr1, "weakly_g_r_clean_t2": gr2,
    }
    out["weakly_g_r_clean"] = _combine(gr1, gr2)
    _G_CACHE[g] = out
    return out


def weakly_g_r_clean_mask(ring, roots):
    """Fast ring-wide ``x = r +- s`` test for a root set, without witnesses."""
    roots = np.asarray(sorted(roots), dtype=np.int64)
    if roots.size == 0:
        return np.zeros(ring.size, dtype=bool)
    reg = _basic(ring)["regular"]
    return reg[ring.sub[:, roots]].any(axis=1) | reg[ring.add[:, roots]].any(axis=1)


def flag_mask(ring, flag, inv=None, g=None):
    """Boolean mask over all elements for one element flag."""
    if flag in ("unit", "idempotent", "regular", "nilpotent", "central", "jacobson"):
        return _basic(ring)[flag]
    if flag in STAR_FLAGS or flag == "sasr1_or_two_p_plus_one":
        if inv is None:
            raise ValueError(f"flag {flag} needs an involution")
        data = _star(inv)[flag]
    elif flag in G_FLAGS:
        if g is None:
            raise ValueError(f"flag {flag} needs a polynomial")
        data = _g(g)[flag]
    elif flag in PLAIN_FLAGS:
        data = _plain(ring)[flag]
    else:
        raise KeyError(flag)
    if isinstance(data, np.ndarray):
        return data
    first = data[0]
    return first if first.dtype == bool else first >= 0


# -- element profiles ---------------------------------------------------------


@dataclass
class ElementProfile:
    element: int
    name: str
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def __getitem__(self, flag):
        return self.flags[flag]

    def merge(self, other):
        self.flags.update(other.flags)
        self.witnesses.update(other.witnesses)
        return self


def _fill(profile, table, x, flags):
    for flag in flags:
        data = table[flag]
        if isinstance(data, np.ndarray):
            profile.flags[flag] = bool(data[x])
            continue
        if data[0].dtype == bool:
            # weak notion: (mask, (type, a, b)) or exchange: (mask, e, branch)
            ok = bool(data[0][x])
            profile.flags[flag] = ok
            if ok:
                if flag.startswith("weakly_") and "exchange" not in flag:
                    t, a, b = data[1]
                    profile.witnesses[flag] = (f"t{int(t[x])}", int(a[x]), int(b[x]))
                else:
                    branch = "1-x" if data[2][x] == 1 else "1+x"
                    profile.witnesses[flag] = (int(data[1][x]), branch)
            continue
        a, b = data
        ok = bool(a[x] >= 0)
        profile.flags[flag] = ok
        if ok:
            profile.witnesses[flag] = (int(a[x]), int(b[x]))


def clean_profile(ring, x):
    """Basic membership plus the clean / r-clean family for ``x``."""
    b = _basic(ring)
    p = ElementProfile(int(x), ring.name(x))
    for flag in ("unit", "idempotent", "regular", "nilpotent", "central", "jacobson"):
        p.flags[flag] = bool(b[flag][x])
    if p.flags["unit"]:
        p.witnesses["unit"] = (int(b["inverse"][x]),)
    if p.flags["regular"]:
        p.witnesses["regular"] = (int(b["regular_y"][x]),)
    if p.flags["nilpotent"]:
        p.witnesses["nilpotent"] = (int(b["nil_index"][x]),)
    _fill(p, _plain(ring), x, (
        "clean", "weakly_clean_t1", "weakly_clean_t2", "weakly_clean",
        "r_clean", "weakly_r_clean_t1", "weakly_r_clean_t2", "weakly_r_clean",
        "strongly_clean",
    ))
    return p


def exchange_profile(ring, x):
    p = ElementProfile(int(x), ring.name(x))
    _fill(p, _plain(ring), x, ("exchange", "weakly_exchange", "exchange_left", "weakly_exchange_left"))
    return p


def star_profile(inv, x):
    p = ElementProfile(int(x), inv.ring.name(x))
    _fill(p, _star(inv), x, STAR_FLAGS)
    return p


def g_profile(g, x):
    p = ElementProfile(int(x), g.ring.name(x))
    _fill(p, _g(g), x, G_FLAGS)
    return p


def element_profile(ring, x, inv=None, g=None):
    p = clean_profile(ring, x).merge(exchange_profile(ring, x))
    if inv is not None:
        p.merge(star_profile(inv, x))
    if g is not None:
        p.merge(g_profile(g, x))
    return p


# -- ring census --------------------------------------------------------------


@dataclass
class Census:
    ring: str
    size: int
    star: str = None
    g: str = None
    counts: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def __getitem__(self, flag):
        return self.flags[flag]

    def witness(self, flag):
        """Least element violating a conjunction flag (None if it holds)."""
        fails = self.failures.get(flag, ())
        return fails[0] if fails else None


def structure_flags(ring):
    b = _basic(ring)
    ids = np.arange(ring.size)
    idem = np.flatnonzero(b["idempotent"])
    nonzero = ids[ids != ring.zero]
    zd = ring.mul[np.ix_(nonzero, nonzero)] == ring.zero
    return {
        "commutative": ring.is_commutative(),
        "abelian": bool(b["central"][idem].all()),
        "boolean": bool(b["idempotent"].all()),
        "no_zero_divisors": not bool(zd.any()),
        "two_invertible": bool(b["unit"][ring.add[ring.one, ring.one]]),
        "trivial_idempotents_only": set(idem.tolist()) == {ring.zero, ring.one},
    }


def ring_census(ring, inv=None, g=None):
    """Counts, structural flags and every ring-level conjunction flag."""
    b = _basic(ring)
    census = Census(
        ring=ring.provenance, size=ring.size,
        star=inv.name if inv is not None else None,
        g=g.text if g is not None else None,
    )
    for key, flag in (("U", "unit"), ("Idem", "idempotent"), ("Reg", "regular"),
                      ("Nil", "nilpotent"), ("J", "jacobson"), ("C", "central")):
        census.counts[key] = int(b[flag].sum())
    census.flags.update(structure_flags(ring))
    conj = {k: v for k, v in RING_CONJUNCTIONS.items() if v in PLAIN_FLAGS}
    if inv is not None:
        star = _star(inv)
        census.counts["P"] = int(len(star["P"]))
        census.flags["star_is_identity"] = inv.is_identity()
        census.flags["idempotents_are_projections"] = bool(
            (inv.star[np.flatnonzero(b["idempotent"])] == np.flatnonzero(b["idempotent"])).all())
        census.flags["units_self_adjoint"] = bool(
            (inv.star[np.flatnonzero(b["unit"])] == np.flatnonzero(b["unit"])).all())
        conj.update({k: v for k, v in RING_CONJUNCTIONS.items()
                     if v in STAR_FLAGS or v == "sasr1_or_two_p_plus_one"})
    if g is not None:
        census.counts["roots"] = int(len(_g(g)["roots"]))
        conj.update({k: v for k, v in RING_CONJUNCTIONS.items() if v in G_FLAGS})
    for ring_flag, elem_flag in conj.items():
        mask = flag_mask(ring, elem_flag, inv, g)
        census.flags[ring_flag] = bool(mask.all())
        census.failures[ring_flag] = tuple(int(i) for i in np.flatnonzero(~mask))
    return census
