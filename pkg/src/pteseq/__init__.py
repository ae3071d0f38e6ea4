"""Ternary sign sequences and equal-power-sum (PTE) pairs, exactly.

The package constructs a family of recursively defined sequences over
{-1, 0, +1}, computes their vanishing moments and shift polynomials with
exact arithmetic, and turns them into Prouhet-Tarry-Escott pairs — two
disjoint integer sets whose power sums agree up to some exponent and
differ at the next — via two generation methods, cross-checked by an
independent brute-force oracle.

Hot kernels (sequence materialization, virtual access, subset search)
run on a compiled extension when built, with a pure-Python fallback
selected at import time; see `kernel_backend`.
"""

from __future__ import annotations

from ._backend import backend_name as kernel_backend
from .errors import (
    MalformedSequenceError,
    MaterializationCapError,
    PairFormatError,
    PteSeqError,
    WorkBudgetError,
)
from .moments import (
    IntPolynomial,
    MomentVector,
    f_degree,
    f_eval,
    f_poly_coeffs,
    moment,
    moments_fast,
)
from .oracle import (
    DEFAULT_BUDGET,
    MethodComparison,
    MethodEntry,
    SearchResult,
    SearchSpec,
    compare_methods,
    exhaustive_search,
    naive_verify,
)
from .pseq import (
    DEFAULT_CAP,
    PSeq,
    Sign,
    SupportSets,
    decode_text,
    element_at,
    encode_text,
    generate,
    iter_signs,
    length_of,
    next_pseq,
    support_sets,
)
from .pte import (
    AffineMap,
    Provenance,
    PtePair,
    VerificationReport,
    pair_degree,
    pair_from_affine,
    pair_from_difference,
    pair_from_json_dict,
    power_sum,
    verify_pair,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "DEFAULT_BUDGET",
    "DEFAULT_CAP",
    "IntPolynomial",
    "MalformedSequenceError",
    "MaterializationCapError",
    "MethodComparison",
    "MethodEntry",
    "MomentVector",
    "PSeq",
    "PairFormatError",
    "Provenance",
    "PteSeqError",
    "PtePair",
    "SearchResult",
    "SearchSpec",
    "Sign",
    "SupportSets",
    "VerificationReport",
    "WorkBudgetError",
    "__version__",
    "compare_methods",
    "decode_text",
    "element_at",
    "encode_text",
    "exhaustive_search",
    "f_degree",
    "f_eval",
    "f_poly_coeffs",
    "generate",
    "iter_signs",
    "kernel_backend",
    "length_of",
    "moment",
    "moments_fast",
    "naive_verify",
    "next_pseq",
    "pair_degree",
    "pair_from_affine",
    "pair_from_difference",
    "pair_from_json_dict",
    "power_sum",
    "support_sets",
    "verify_pair",
]
