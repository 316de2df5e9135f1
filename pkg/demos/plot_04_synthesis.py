"""
From a polynomial pair back to a term
=====================================

Every strongly total pair is the value of some centroidal term. The
synthesizer builds one and checks it by evaluation.
"""

import random

from centroidal import NotStronglyTotal, Poly, PolyPair, eval_term, parse_pair, print_term, synthesize

# %%
r = synthesize(parse_pair("(X2, X1)"))
print(print_term(r.term))
print("verified:", r.verified, "nodes:", r.nodes)

# %%
# A pair whose second component is not 1 - P1 on the nose, but only up to
# a kernel element.
pp = parse_pair("(X1*X3, 1 - X1 + X1*X4)", 2)
r = synthesize(pp)
print("basis elements used:", r.basis_count, " nodes:", r.nodes)
assert eval_term(r.term, 2) == pp

# %%
# Terms grow quickly with the degree of the input.
rng = random.Random(0)
for deg in range(1, 4):
    p1 = Poly.zero(4)
    for _ in range(3):
        p1 = p1 + Poly.var(4, rng.randint(1, 4)) ** rng.randint(1, deg)
    print(f"max degree {deg}: {synthesize(PolyPair(p1, 1 - p1)).nodes} nodes")

# %%
# Pairs that fail the identity are refused with their defect.
try:
    synthesize(parse_pair("(X1, X1)"))
except NotStronglyTotal as exc:
    print("refused:", exc)
