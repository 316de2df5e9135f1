"""
Finite fields: total is not strongly total
==========================================

Over GF(p) the polynomial ``X^p - X`` vanishes on every point, so a pair
can be total on all inputs yet fail the polynomial identity.
"""

from centroidal import GF, counterexample_pair, is_total, synthesize, NotStronglyTotal

# %%
for p in (2, 3, 5, 7):
    pp = counterexample_pair(p)
    report = is_total(pp)
    print(f"GF({p}) {pp}  total={report.semantically_total}  strongly={report.strongly_total}  defect={report.defect}")

# %%
# Synthesis refuses it, and that is correct: no term evaluates to it.
try:
    synthesize(counterexample_pair(3))
except NotStronglyTotal as exc:
    print(exc)
