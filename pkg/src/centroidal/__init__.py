"""Exact centroidal calculus for boolean functions over polynomial pairs.

Typical use::

    >>> from centroidal import parse_term, eval_term, parse_pair, synthesize
    >>> print(eval_term(parse_term("(x1 * x2)", 2), 2))
    (X1*X3, X1*X4 + X2)
    >>> synthesize(parse_pair("(X2, X1)")).verified
    True
"""

from .calculus import (
    FALSE,
    TRUE,
    Affine,
    ConstF,
    ConstScalar,
    ConstT,
    If,
    Not,
    Pi1,
    Plus,
    Star,
    Term,
    Var,
    affine,
    desugar,
    eval_term,
    flatten,
    node_count,
    recipe_a,
    recipe_b,
    recipe_c,
)
from .errors import (
    AffineSumNotOne,
    ArityMismatch,
    CentroidalError,
    DivisionByZero,
    EnumerationTooLarge,
    FieldMismatch,
    NotInKernel,
    NotPrime,
    NotStronglyTotal,
    ParseError,
    SecondComponentNonzero,
    VarOutOfRange,
)
from .field import GF, QQ, FieldSpec, Mod, scalar_arith
from .poly import (
    Poly,
    PolyPair,
    count_monomials_at_most,
    embed_odd,
    eval_at,
    from_split_coords,
    phi,
    split_coords,
    substitute,
    swap_pairs,
)
from .polytext import parse_pair, parse_poly, poly_from_json, poly_to_json
from .synthesis import SynthesisResult, basis_term, counterexample_pair, synthesize
from .syntax import parse_term, print_term
from .totality import (
    BasisElement,
    KernelDecomposition,
    TotalityReport,
    decompose,
    is_strongly_total,
    is_total,
    kernel_basis,
    kernel_dim,
    realize_basis_element,
    reconstruct,
)

__version__ = "0.1.0"
