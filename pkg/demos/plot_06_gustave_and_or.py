"""
Gustave's function and three ways to say "or"
==============================================

Gustave's function is stable but not sequential. It is still a centroidal
term, built in eight steps.
"""

from fractions import Fraction

from centroidal import decompose, print_term
from centroidal.corpus import GUSTAVE_NAMES, corpus_gustave, corpus_or

# %%
for e in corpus_gustave():
    print(f"{e.name}: {print_term(e.term)}")
    print(f"   = {e.evaluate().format(GUSTAVE_NAMES)}")

# %%
# The kernel coordinates of P1 + P2 - 1 for the final pair.
G = corpus_gustave()[-1].evaluate()
for c, b in decompose(G.p1 + G.p2 - 1, 3):
    print(f"{str(c):>3} * {b}")

# %%
# Sequential, symmetric and parallel or, evaluated at two half-truths.
half = [Fraction(1, 2)] * 4
for variant in ("sequential", "symmetric", "parallel"):
    e = corpus_or(variant)
    a, b = e.evaluate().eval_at(half)
    print(f"{variant:10s} {e.expected}   at halves: ({a}, {b})")
