"""Free Nijenhuis algebra kernel.

Exact symbolic computation in the free Nijenhuis algebra on a finite
alphabet: the alternating bracketed-word basis, the diamond product, the
operator N, the coproduct and left counit, the degree grading and the right
antipode, plus exhaustive law verification over enumerated search spaces.
"""

from ._core import (
    Element,
    FnaError,
    LawReport,
    Tensor,
    Word,
    antipode,
    bracket,
    check_connected,
    convolve,
    coproduct,
    counit,
    diamond,
    dimension_series,
    enumerate_basis,
    eval_expr,
    extend_hom,
    known_laws,
    run_law_suite,
    word,
    __version__,
)

__all__ = [
    "Element",
    "FnaError",
    "LawReport",
    "Tensor",
    "Word",
    "antipode",
    "bracket",
    "check_connected",
    "convolve",
    "coproduct",
    "counit",
    "diamond",
    "dimension_series",
    "enumerate_basis",
    "eval_expr",
    "extend_hom",
    "known_laws",
    "run_law_suite",
    "word",
    "__version__",
]
