"""
Boolean functions as polynomial pairs
=====================================

A boolean value is a pair ``(a, b)``: ``T = (1, 0)``, ``F = (0, 1)``.
A function of ``n`` booleans is a pair of polynomials in ``2n`` variables,
argument ``i`` being carried by ``X_{2i-1}, X_{2i}``.
"""

from fractions import Fraction

from centroidal import Poly, PolyPair, parse_pair, phi, split_coords

# %%
# Negation swaps the two components.
neg = parse_pair("(X2, X1)")
print("not      :", neg)
for point in ([1, 0], [Fraction(1, 3), Fraction(2, 3)]):
    a, b = neg.eval_at(point)
    print(f"not {point[0]}: ({a}, {b})")

# %%
# A point is total when its components add up to 1. Substituting
# ``X2 := 1 - X1`` (the map phi) checks this for every total input at once.
conj = parse_pair("(X1*X3, X1*X4 + X2)")
print("phi(P1) + phi(P2) =", phi(conj.p1) + phi(conj.p2))

# %%
# A pair that is not total: the defect is 2*X1 - 1.
bad = parse_pair("(X1, X1)")
print("defect:", phi(bad.p1) + phi(bad.p2) - 1)

# %%
# The coordinates ``Y = X1``, ``S = X1 + X2`` separate what phi forgets.
P = Poly.var(2, 1) * Poly.var(2, 2)
print(P, "  ->  ", split_coords(P).format(["Y1", "S1"]))

# %%
# Arithmetic is exact throughout, also for pairs.
half = PolyPair.const(1, Fraction(1, 2), Fraction(1, 2))
print("average of T and F:", half)
