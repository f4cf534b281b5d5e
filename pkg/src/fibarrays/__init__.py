"""Exact banded triangular arrays, periodic diagonal sums and Fibonacci identities."""
from .classic_arrays import (
    binomial,
    catalan_B,
    catalan_embedding_spec,
    catalan_number,
    fibonacci,
    pascal_alt_row,
    trinomial,
)
from .identities import (
    andrews_floor_sum,
    check_equivalence,
    embedding_doubling_check,
    eval_identity,
    verify_range,
)
from .oracles import enumerate_path_pairs, expand_trinomial_row, min_recurrence
from .seq_core import (
    ArraySpec,
    RecurrenceCoeffs,
    SumSpec,
    TheoremScopeError,
    TwoTailedRow,
    VerifyReport,
    build_array,
    check_theorem,
    d_series,
    recurrence_coeffs,
    signed_diag_sum,
    step_row,
)

__version__ = "0.1.0"
