"""A short walk through the engine: build rings, look at elements, take a census."""

# %%
import numpy as np

from cleanring import element_profile, make_zn, matrix_ring, ring_census
from cleanring.classify import basic_sets
from cleanring.dsl import build_spec

z6 = make_zn(6)
b = basic_sets(z6)
print("units", sorted(b.units), "idempotents", sorted(b.idempotents))

# %% every element of Z6 written as unit + idempotent, lowest pair first
for x in z6.elements:
    u, e = element_profile(z6, x).witnesses["clean"]
    print(f"{z6.name(x)} = {z6.name(u)} + {z6.name(e)}")

# %% a noncommutative ring: 2x2 matrices over Z2
m = matrix_ring(make_zn(2), 2)
census = ring_census(m)
print(census.counts)
print({k: v for k, v in census.flags.items() if k.startswith("is_")})

# %% the same ring from a spec string; tables agree exactly
again = build_spec("M(Zn(2),2)").ring
print("same tables:", np.array_equal(again.mul, m.mul))

# %% one element, every flag
p = element_profile(m, m.element("[[1,1],[0,0]]"))
print({k: v for k, v in p.flags.items() if v})
print(p.witnesses)
