"""Exact-arithmetic descent and peak algebras of Coxeter types A, B, D.

The package builds the descent algebras of the symmetric, hyperoctahedral
and even-signed permutation groups inside their rational group algebras,
together with the peak algebra, its interior-peak ideal, the
Mantaci-Reutenauer algebra, the maps connecting them, their graded
(external) Hopf structure, and the action on tensor words -- and verifies
every identity among these by exhaustive enumeration at small rank.
"""

from .algebra import (
    NOT_IN_SPAN,
    AlgElem,
    CoordVector,
    elem_from_json,
    elem_to_json,
    express_in_span,
    internal_product,
    linear_combine,
    push_forward,
    span_rank,
)
from .perms import (
    CapExceeded,
    GeneratorSet,
    PeakIndex,
    compose,
    coxeter_length_table,
    descent_set,
    fibonacci,
    forget_signs,
    group_elements,
    identity,
    interior_peak_set,
    inverse,
    iter_group,
    peak_set,
)

__all__ = [
    "AlgElem",
    "CapExceeded",
    "CoordVector",
    "GeneratorSet",
    "NOT_IN_SPAN",
    "PeakIndex",
    "compose",
    "coxeter_length_table",
    "descent_set",
    "elem_from_json",
    "elem_to_json",
    "express_in_span",
    "fibonacci",
    "forget_signs",
    "group_elements",
    "identity",
    "interior_peak_set",
    "internal_product",
    "inverse",
    "iter_group",
    "linear_combine",
    "peak_set",
    "push_forward",
    "span_rank",
]

__version__ = "0.1.0"
