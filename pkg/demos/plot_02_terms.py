"""
Writing and evaluating centroidal terms
=======================================

Terms are built from ``T``, ``F``, variables, ``if-then-else`` and affine
combinations whose weights sum to 1. Everything else is sugar.
"""

from centroidal import desugar, eval_term, node_count, parse_term, print_term

# %%
# The concrete syntax. ``(t * u)`` reads "if t then u else F".
for text in ["T", "not x1", "(x1 * x2)", "x1^+", "pi1 x1", "{1/2 x1 + 1/2 not x1}"]:
    n = 2
    t = parse_term(text, n)
    print(f"{text:24s} {eval_term(t, n)}")

# %%
# ``*`` is not commutative.
a = eval_term(parse_term("(x1 * x2)", 2), 2)
b = eval_term(parse_term("(x2 * x1)", 2), 2)
print(a, "vs", b)

# %%
# Sugar expands into the four core constructors.
t = parse_term("pi1 (x1 * x2)", 2)
core = desugar(t)
print(print_term(core))
print("nodes:", node_count(t), "->", node_count(core))
assert eval_term(core, 2) == eval_term(t, 2)
