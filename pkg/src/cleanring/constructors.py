"""Ring constructors.

Every constructor stores elements as coordinate vectors over smaller rings
and numbers them in mixed radix with the *first* coordinate varying
fastest, so ``(1,0)`` precedes ``(0,1)`` in a product and the constant term
is the least significant digit of a polynomial.
"""

from __future__ import annotations

from itertools import product as iproduct

import numpy as np

from .errors import BadEndomorphism, CapExceeded, NonMonic
from .polynomial import format_polynomial, parse_polynomial, trim
from .ring import MAX_SIZE, build_ring
from .structure import RingMap


def _weights(sizes):
    w = np.ones(len(sizes), dtype=np.int64)
    for k in range(1, len(sizes)):
        w[k] = w[k - 1] * sizes[k - 1]
    return w


def _all_coords(sizes):
    """Coordinate array of shape (prod(sizes), len(sizes)), first coordinate fastest."""
    total = int(np.prod(sizes))
    ids = np.arange(total)
    coords = np.empty((total, len(sizes)), dtype=np.int64)
    for k, s in enumerate(sizes):
        coords[:, k] = ids % s
        ids = ids // s
    return coords


def _cap(size, cap):
    if size > cap:
        raise CapExceeded(f"ring would have {size} elements (cap {cap})")


def _componentwise_add(factors, coords):
    n = coords.shape[0]
    w = _weights([f.size for f in factors])
    table = np.zeros((n, n), dtype=np.int64)
    for k, f in enumerate(factors):
        c = coords[:, k]
        table += f.add[c[:, None], c[None, :]] * w[k]
    return table


def _fold_add(base, terms):
    acc = terms[0]
    for t in terms[1:]:
        acc = base.add[acc, t]
    return acc


def make_zn(n):
    """Integers modulo ``n``."""
    if n < 2:
        raise ValueError("Zn needs n >= 2")
    i = np.arange(n)
    return build_ring(
        (i[:, None] + i[None, :]) % n,
        (i[:, None] * i[None, :]) % n,
        0, 1 % n,
        names=[str(k) for k in range(n)],
        provenance=f"Zn({n})",
        meta={"kind": "zn", "n": n},
    )


def _poly_name(coeffs):
    parts = []
    for deg, c in enumerate(coeffs):
        if c == 0:
            continue
        if deg == 0:
            parts.append(str(c))
        else:
            mono = "x" if deg == 1 else f"x^{deg}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) or "0"


def make_poly_quotient(n, f, cap=MAX_SIZE):
    """``Z_n[x]/(f)`` for a monic ``f`` given as text or coefficient list."""
    if n < 2:
        raise ValueError("polyq needs n >= 2")
    raw = parse_polynomial(f) if isinstance(f, str) else list(f)
    coeffs = trim([c % n for c in raw])
    d = len(coeffs) - 1
    if d < 1:
        raise NonMonic(f"{f!r} has degree < 1 over Z_{n}")
    if coeffs[-1] != 1:
        raise NonMonic(f"{f!r} is not monic over Z_{n}")
    size = n ** d
    _cap(size, cap)

    # x^i * x^j reduced modulo f, for i, j < d
    def reduce(vec):
        vec = list(vec)
        for top in range(len(vec) - 1, d - 1, -1):
            c = vec[top]
            if c:
                for i in range(d + 1):
                    vec[top - d + i] = (vec[top - d + i] - c * coeffs[i]) % n
        return (vec + [0] * d)[:d]

    basis = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            mono = [0] * (i + j + 1)
            mono[i + j] = 1
            basis[i, j] = reduce(mono)

    coords = _all_coords([n] * d)
    w = _weights([n] * d)
    add = ((coords[:, None, :] + coords[None, :, :]) % n) @ w
    prod = np.einsum("ai,bj,ijk->abk", coords, coords, basis) % n
    mul = prod @ w
    names = [_poly_name(list(c)) for c in coords]
    canon = format_polynomial(coeffs)
    return build_ring(
        add, mul, 0, 1, names=names,
        provenance=f'polyq({n},"{canon}")',
        meta={"kind": "polyq", "n": n, "f": tuple(coeffs), "coords": coords},
    )


def direct_product(factors, cap=MAX_SIZE):
    """Componentwise product of two or more rings; names are tuples."""
    factors = list(factors)
    if len(factors) < 2:
        raise ValueError("direct_product needs at least two factors")
    sizes = [f.size for f in factors]
    size = int(np.prod(sizes))
    _cap(size, cap)
    coords = _all_coords(sizes)
    w = _weights(sizes)
    add = _componentwise_add(factors, coords)
    mul = np.zeros_like(add)
    for k, f in enumerate(factors):
        c = coords[:, k]
        mul += f.mul[c[:, None], c[None, :]] * w[k]
    zero = int(sum(f.zero * w[k] for k, f in enumerate(factors)))
    one = int(sum(f.one * w[k] for k, f in enumerate(factors)))
    names = ["(" + ",".join(f.name(c[k]) for k, f in enumerate(factors)) + ")" for c in coords]
    return build_ring(
        add, mul, zero, one, names=names,
        provenance="product(" + ",".join(f.provenance for f in factors) + ")",
        meta={"kind": "product", "factors": tuple(factors), "coords": coords},
    )


def boolean_ring(k):
    """``Z_2`` to the power ``k``."""
    if k == 1:
        return make_zn(2)
    return direct_product([make_zn(2) for _ in range(k)])


def matrix_ring(base, k, cap=MAX_SIZE):
    """Full ``k x k`` matrices over ``base``; entries are numbered row-major."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    size = base.size ** (k * k)
    _cap(size, cap)
    coords = _all_coords([base.size] * (k * k))
    w = _weights([base.size] * (k * k))
    add = _componentwise_add([base] * (k * k), coords)
    A = coords.reshape(-1, k, k)
    out = np.zeros((size, size), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            terms = [base.mul[A[:, i, l][:, None], A[None, :, l, j]] for l in range(k)]
            out += _fold_add(base, terms) * w[i * k + j]
    ident = np.full((k, k), base.zero)
    np.fill_diagonal(ident, base.one)
    one = int(ident.ravel() @ w)
    zero = int(np.full(k * k, base.zero) @ w)
    names = [
        "[" + ",".join("[" + ",".join(base.name(a) for a in row) + "]" for row in m) + "]"
        for m in A
    ]
    return build_ring(
        add, out, zero, one, names=names,
        provenance=f"M({base.provenance},{k})",
        meta={"kind": "matrix", "base": base, "k": k, "coords": coords},
    )


def triangular_ring(base, cap=MAX_SIZE):
    """Lower triangular ``[[a,0],[m,b]]`` over ``base``, coordinates ``(a, m, b)``."""
    size = base.size ** 3
    _cap(size, cap)
    coords = _all_coords([base.size] * 3)
    w = _weights([base.size] * 3)
    add = _componentwise_add([base] * 3, coords)
    a, m, b = coords[:, 0], coords[:, 1], coords[:, 2]
    pa = base.mul[a[:, None], a[None, :]]
    pm = base.add[base.mul[m[:, None], a[None, :]], base.mul[b[:, None], m[None, :]]]
    pb = base.mul[b[:, None], b[None, :]]
    mul = pa * w[0] + pm * w[1] + pb * w[2]
    z = base.zero
    one = int(base.one * w[0] + z * w[1] + base.one * w[2])
    zero = int(z * w.sum())
    names = [f"[[{base.name(x)},{base.name(z)}],[{base.name(y)},{base.name(t)}]]" for x, y, t in coords]
    return build_ring(
        add, mul, zero, one, names=names,
        provenance=f"tri({base.provenance})",
        meta={"kind": "triangular", "base": base, "coords": coords},
    )


def _series_name(base, coeffs):
    parts = []
    for deg, c in enumerate(coeffs):
        if c == base.zero:
            continue
        label = base.name(c)
        if deg == 0:
            parts.append(label)
            continue
        if "+" in label:
            label = f"({label})"
        mono = "t" if deg == 1 else f"t^{deg}"
        parts.append(mono if c == base.one else f"{label}{mono}")
    return "+".join(parts) or base.name(base.zero)


def truncated_skew_series(base, alpha, length, cap=MAX_SIZE):
    """``base[t; alpha] / (t^length)`` with ``t r = alpha(r) t``.

    Element names use ``t`` for the series variable.  ``alpha`` must be a
    unital endomorphism of ``base``.
    """
    if not isinstance(alpha, RingMap) or alpha.source is not base or alpha.target is not base:
        raise BadEndomorphism("alpha must be an endomorphism of the base ring")
    if not alpha.unital or alpha(base.one) != base.one:
        raise BadEndomorphism("alpha must be unital")
    if length < 2:
        raise ValueError("truncation length must be >= 2")
    size = base.size ** length
    _cap(size, cap)
    coords = _all_coords([base.size] * length)
    w = _weights([base.size] * length)
    add = _componentwise_add([base] * length, coords)

    powers = [np.arange(base.size)]
    for _ in range(1, length):
        powers.append(alpha.image[powers[-1]])

    mul = np.zeros((size, size), dtype=np.int64)
    for k in range(length):
        terms = []
        for i in range(k + 1):
            j = k - i
            left = coords[:, i][:, None]
            right = powers[i][coords[:, j]][None, :]
            terms.append(base.mul[left, right])
        mul += _fold_add(base, terms) * w[k]
    zero = int(base.zero * w.sum())
    one = int(base.one + base.zero * w[1:].sum())
    names = [_series_name(base, list(c)) for c in coords]
    alpha_name = alpha.name or "id"
    return build_ring(
        add, mul, zero, one, names=names,
        provenance=f"trunc({base.provenance},{alpha_name},{length})",
        meta={"kind": "trunc", "base": base, "alpha": alpha, "length": length, "coords": coords},
    )


def monic_polynomials(n, degree):
    """All monic coefficient lists of the given degree over ``Z_n``, lexicographic."""
    out = []
    for low in iproduct(range(n), repeat=degree):
        out.append(list(low) + [1])
    return out


def coordinates(ring):
    """Per-element coordinate array stored by the constructor, if any."""
    return ring.meta.get("coords")
