"""Exact computation with Katalan functions and K-k-Schur functions.

Symmetric functions live in the h-monomial basis with integer
coefficients.  Root ideals, lowering multisets, and integer weights
index the Katalan functions K(Psi; M; gamma); the kkschur module builds
the K-k-Schur family and its verification suites on top.
"""

from .errors import (
    KatalanError,
    FullSupport,
    InvalidIdeal,
    InvalidMultiset,
    InvalidWeight,
    LimitExceeded,
    MismatchedRank,
    NonIntegral,
    NonUnique,
    NotACore,
    NotGrassmannian,
    NotInSpan,
    NotKBounded,
    NotSamePath,
)
from .partitions import (
    Partition,
    Weight,
    conjugate,
    contains,
    is_k_bounded,
    is_partition,
    k_rectangle,
    kbounded_partitions,
    partition,
    partitions_of,
    partitions_up_to,
    size,
)
from .symfunc import (
    SymFunc,
    dual_groth_det,
    dual_groth_raise,
    e_perp,
    elementary,
    expand_in_basis,
    F_auto,
    g_column_perp,
    k_hom,
    kappa,
    multiply,
    omega,
    one_minus_G1_perp,
    schur,
)
from .rootideal import (
    Multiset,
    RootIdeal,
    delta_k,
    diagonal,
    enumerate_ideals,
    staircase,
)
from .katalan_fn import (
    KatalanIndex,
    catalan_H,
    eval_via_H,
    evaluate,
    evaluate_checked,
    index,
    normalize,
)
from .kkschur import (
    BranchReport,
    LabeledFamily,
    SweepReport,
    branch,
    conjecture_sweep,
    expand_report,
    g_closed,
    g_kk,
    kschur,
    pieri_triple,
    set_cache,
    shift,
    shift_closed,
    tilde_g_w,
)

__version__ = "0.1.0"

__all__ = [
    "KatalanError", "FullSupport", "InvalidIdeal", "InvalidMultiset",
    "InvalidWeight", "LimitExceeded", "MismatchedRank", "NonIntegral",
    "NonUnique", "NotACore", "NotGrassmannian", "NotInSpan", "NotKBounded",
    "NotSamePath",
    "Partition", "Weight", "conjugate", "contains", "is_k_bounded",
    "is_partition", "k_rectangle", "kbounded_partitions", "partition",
    "partitions_of", "partitions_up_to", "size",
    "SymFunc", "dual_groth_det", "dual_groth_raise", "e_perp", "elementary",
    "expand_in_basis", "F_auto", "g_column_perp", "k_hom", "kappa",
    "multiply", "omega", "one_minus_G1_perp", "schur",
    "Multiset", "RootIdeal", "delta_k", "diagonal", "enumerate_ideals",
    "staircase",
    "KatalanIndex", "catalan_H", "eval_via_H", "evaluate",
    "evaluate_checked", "index", "normalize",
    "BranchReport", "LabeledFamily", "SweepReport", "branch",
    "conjecture_sweep", "expand_report", "g_closed", "g_kk", "kschur",
    "pieri_triple", "set_cache", "shift", "shift_closed", "tilde_g_w",
    "__version__",
]
