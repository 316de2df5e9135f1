"""
The kernel of phi and its basis
===============================

Strongly total first components are exactly ``1 + ker(phi)``. The kernel
has an explicit basis indexed by exponent vectors ``(I, J)`` with ``I != 0``.
"""

from math import comb

from centroidal import decompose, kernel_basis, kernel_dim, parse_poly, realize_basis_element, reconstruct

# %%
# Degree at most 2, one argument pair.
for b in kernel_basis(1, 2):
    print(b, " ", realize_basis_element(b, 1))

# %%
# The dimension is the number of monomials of degree <= d in 2n variables
# minus those in n variables.
for n in range(1, 4):
    row = [kernel_dim(n, d) for d in range(5)]
    assert row == [comb(2 * n + d, 2 * n) - comb(n + d, n) for d in range(5)]
    print(f"n={n}:", row)

# %%
# Decomposing a kernel element reads its coordinates off the (Y, S) split.
K = parse_poly("X1*X3 + X1*X4 - X1 + X2^2 - 1 + 2*X1 - X1^2", 4)
dec = decompose(K)
for c, b in dec:
    print(f"{str(c):>3} * {b}")
assert reconstruct(dec, 2) == K
