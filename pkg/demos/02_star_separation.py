"""Where the *-versions of the weak notions part ways with the plain ones."""

# %%
from cleanring import boolean_ring, ring_census
from cleanring.search import default_corpus, find_witness
from cleanring.star import enumerate_involutions

# on Z2 x Z2 the swap kills weak *-cleanness; the identity does not
ring = boolean_ring(2)
for inv in enumerate_involutions(ring):
    c = ring_census(ring, inv)
    bad = c.witness("is_weakly_star_clean")
    print(inv.name, c["is_weakly_clean"], c["is_weakly_star_clean"],
          ring.name(bad) if bad is not None else "-")

# %% boolean rings up to 16 elements: weakly *-clean exactly for the identity
for k in range(1, 5):
    ring = boolean_ring(k)
    rows = [(inv.is_identity(), ring_census(ring, inv)["is_weakly_star_clean"])
            for inv in enumerate_involutions(ring)]
    print(f"Z2^{k}", len(rows), "involutions, agree:", all(a == b for a, b in rows))

# %% corpus-wide: which *-rings are weakly clean but not weakly *-clean
corpus = default_corpus()
result = find_witness("is_weakly_clean & !is_weakly_star_clean", corpus)
print(len(result), "witnesses out of", result.scanned_pairs, "ring/involution pairs")
for w in result.witnesses[:8]:
    print("  ", w.label())

# %% the plain clean-type notions never separate on finite rings
print("not clean anywhere:", len(find_witness("!is_clean", corpus)))
