"""Run the check catalog on a small corpus and look at what came back."""

# %%
from collections import Counter

from cleanring import make_zn
from cleanring.search import Caps, corpus_generate
from cleanring.structure import ideal_closure
from cleanring.theorems import CATALOG, run_check, run_suite, summarize

z4 = make_zn(4)
rep = run_check("C10", ring=z4, ideal=ideal_closure(z4, [2]))
print(rep.status, rep.witness)

# %% a reduced corpus keeps this quick
corpus = corpus_generate(Caps(size=32, zn=16, product=32, involutions=16))
reports = run_suite(corpus)
s = summarize(reports)
print(len(corpus), "rings,", len(reports), "runs,", s["total"])

# %% checks that never met their hypotheses at this size
idle = [cid for cid, counts in s["per_check"].items() if counts["verified"] == 0]
for cid in idle:
    print(cid, CATALOG[cid].statement)

# %% the most common reasons for not-applicable
reasons = Counter(r.witness["reason"] for r in reports if r.status == "not-applicable")
for reason, n in reasons.most_common(6):
    print(f"{n:5d}  {reason}")
