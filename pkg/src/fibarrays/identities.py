"""Registry of Fibonacci identities over Pascal, trinomial and Catalan arrays.

Registry ids and the sums they evaluate (``F`` is Fibonacci, ``C`` binomial,
``T`` trinomial, ``B`` Catalan's triangle, all sums over ``j`` in Z unless noted):

=============  ============  =====================================================
id             lhs           rhs
=============  ============  =====================================================
eq1            F(n)          sum_k (-1)^k C(n-1, floor((n-1-5k)/2))
eq2            F(n)          sum_k (-1)^k C(n,   floor((n-1-5k)/2))
eq3            F(2n+1)       C(2n+1, n-5j) - C(2n+1, n-5j-1)
eq4            F(2n+2)       C(2n+2, n-5j) - C(2n+2, n-5j-1)
eq5            F(2n+2)       C(2n+1, n-5j) - C(2n+1, n-5j-2)
eq6            F(2n+1)       C(2n,   n-5j) - C(2n,   n-5j-2)
eq9            F(n)          T(n+1, 5j) - T(n+1, 5j-1)
eq10           F(n+1)        T(n, 5j) - T(n, 5j-2)
catA           F(2n-1)       sum_{j>=0} B(n, 5j+1) - B(n, 5j+4)
catB           F(2n-2)       sum_{j>=0} B(n, 5j+2) - B(n, 5j+3)
catA_binom     F(2n-1)       catA with B(n, k) = (k/n) C(2n, n-k)
catB_binom     F(2n-2)       catB with B(n, k) = (k/n) C(2n, n-k)
=============  ============  =====================================================

eq3 through eq10 are read off banded arrays as signed diagonal sums; the
rest are evaluated as explicit finite sums.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

from .classic_arrays import (
    EVEN_PASCAL,
    ODD_PASCAL,
    TRINOMIAL,
    binomial,
    catalan_B,
    catalan_embedding_spec,
    fibonacci,
)
from .seq_core import (
    ArraySpec,
    Counterexample,
    RowCache,
    SumSpec,
    VerifyReport,
    check_recurrence,
    recurrence_coeffs,
    signed_diag_sum,
)


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class ArrayReading:
    """rhs(n) = signed diagonal sum of row ``n + row_shift`` of ``array``."""

    array: ArraySpec
    sum_spec: SumSpec
    row_shift: int = 0


@dataclass(frozen=True)
class IdentityDef:
    id: str
    fib_index: Callable[[int], int]
    rhs: Callable[[int], int]
    n_min: int
    reading: ArrayReading | None = None
    # array whose stencil fixes the second-order recurrence of the rhs
    recurrence_array: ArraySpec | None = None


def andrews_floor_sum(n: int, variant: Literal["one", "two"]) -> int:
    """``sum_k (-1)^k C(top, floor((n-1-5k)/2))`` with top = n-1 (one) or n (two)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if variant == "one":
        top = n - 1
    elif variant == "two":
        top = n
    else:
        raise ValueError(f"variant must be 'one' or 'two', got {variant!r}")
    # lower index must land in 0..top: 0 <= (n-1-5k)//2 <= top
    k_lo = -((2 * top + 2 - n) // 5) - 1
    k_hi = (n - 1) // 5 + 1
    total = 0
    for k in range(k_lo, k_hi + 1):
        total += (-1 if k % 2 else 1) * binomial(top, (n - 1 - 5 * k) // 2)
    return total


_caches: dict[ArraySpec, RowCache] = {}


def _rows_for(spec: ArraySpec) -> RowCache:
    cache = _caches.get(spec)
    if cache is None:
        cache = _caches.setdefault(spec, RowCache(spec))
    return cache


def _reading_rhs(reading: ArrayReading) -> Callable[[int], int]:
    def rhs(n: int) -> int:
        row = _rows_for(reading.array).row(n + reading.row_shift)
        value = signed_diag_sum(row, reading.sum_spec)
        assert value.denominator == 1
        return int(value)

    return rhs


def _catalan_rhs(first: int, second: int) -> Callable[[int], int]:
    def rhs(n: int) -> int:
        return sum(
            catalan_B(n, 5 * j + first) - catalan_B(n, 5 * j + second)
            for j in range((n - first) // 5 + 1)
        )

    return rhs


def _catalan_binom_rhs(first: int, second: int) -> Callable[[int], int]:
    def term(n: int, k: int) -> Fraction:
        return Fraction(k, n) * binomial(2 * n, n - k)

    def rhs(n: int) -> int:
        total = sum(
            (term(n, 5 * j + first) - term(n, 5 * j + second) for j in range((n - first) // 5 + 1)),
            Fraction(0),
        )
        assert total.denominator == 1
        return int(total)

    return rhs


def _array_identity(id, fib_index, n_min, array, sum_spec, row_shift=0) -> IdentityDef:
    reading = ArrayReading(array, sum_spec, row_shift)
    return IdentityDef(id, fib_index, _reading_rhs(reading), n_min, reading, array)


def _build_registry() -> dict[str, IdentityDef]:
    embedding = catalan_embedding_spec()
    defs = [
        IdentityDef("eq1", lambda n: n, lambda n: andrews_floor_sum(n, "one"), 1),
        IdentityDef("eq2", lambda n: n, lambda n: andrews_floor_sum(n, "two"), 1),
        _array_identity("eq3", lambda n: 2 * n + 1, 0, ODD_PASCAL, SumSpec(0, 1)),
        _array_identity("eq4", lambda n: 2 * n + 2, 0, EVEN_PASCAL, SumSpec(-1, 1), row_shift=1),
        _array_identity("eq5", lambda n: 2 * n + 2, 0, ODD_PASCAL, SumSpec(0, 2)),
        _array_identity("eq6", lambda n: 2 * n + 1, 0, EVEN_PASCAL, SumSpec(0, 2)),
        _array_identity("eq9", lambda n: n, 1, TRINOMIAL, SumSpec(0, 1), row_shift=1),
        _array_identity("eq10", lambda n: n + 1, 0, TRINOMIAL, SumSpec(0, 2)),
        IdentityDef("catA", lambda n: 2 * n - 1, _catalan_rhs(1, 4), 1, None, embedding),
        IdentityDef("catB", lambda n: 2 * n - 2, _catalan_rhs(2, 3), 1, None, embedding),
        IdentityDef("catA_binom", lambda n: 2 * n - 1, _catalan_binom_rhs(1, 4), 1, None, embedding),
        IdentityDef("catB_binom", lambda n: 2 * n - 2, _catalan_binom_rhs(2, 3), 1, None, embedding),
    ]
    return {d.id: d for d in defs}


REGISTRY: dict[str, IdentityDef] = _build_registry()
IDENTITY_IDS: tuple[str, ...] = tuple(sorted(REGISTRY))


def get_identity(id: str) -> IdentityDef:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id {id!r}") from None


def eval_identity(id: str, n: int) -> tuple[int, int]:
    """Exact ``(F_index(n), rhs(n))`` for a registered identity."""
    ident = get_identity(id)
    if n < ident.n_min:
        raise ValueError(f"{id} is defined for n >= {ident.n_min}, got {n}")
    return fibonacci(ident.fib_index(n)), ident.rhs(n)


def verify_range(id: str, n_lo: int, n_hi: int) -> VerifyReport:
    ident = get_identity(id)
    if n_lo > n_hi:
        raise ValueError(f"empty range {n_lo}..{n_hi}")
    if n_lo < ident.n_min:
        raise ValueError(f"{id} is defined for n >= {ident.n_min}, got n_lo={n_lo}")
    for n in range(n_lo, n_hi + 1):
        lhs, rhs = eval_identity(id, n)
        if lhs != rhs:
            return VerifyReport(id, n_lo, n_hi, Counterexample(n, lhs, rhs))
    return VerifyReport(id, n_lo, n_hi)


def check_reduction(id: str, n_hi: int) -> VerifyReport:
    """Check the rhs obeys its array's second-order recurrence on n_min..n_hi.

    Together with the two base cases at n_min and n_min + 1 this reduces the
    identity to a finite check, because F_{2n+c} and F_{n+c} obey the same
    recurrences (3, -1) and (1, 1).
    """
    ident = get_identity(id)
    if ident.recurrence_array is None:
        raise ValueError(f"{id} is not read off a banded array")
    coeffs = recurrence_coeffs(ident.recurrence_array.alpha, ident.recurrence_array.beta)
    series = [ident.rhs(n) for n in range(ident.n_min, n_hi + 1)]
    report = check_recurrence(series, coeffs, ident.n_min, id=f"{id}:recurrence")
    if not report.passed:
        return report
    for n in (ident.n_min, ident.n_min + 1):
        lhs, rhs = eval_identity(id, n)
        if lhs != rhs:
            return VerifyReport(f"{id}:recurrence", ident.n_min, n_hi,
                                Counterexample(n, lhs, rhs, "base case"))
    fib = [fibonacci(ident.fib_index(n)) for n in range(ident.n_min, n_hi + 1)]
    lhs_report = check_recurrence(fib, coeffs, ident.n_min, id=f"{id}:recurrence")
    if not lhs_report.passed:
        return lhs_report
    return VerifyReport(f"{id}:recurrence", ident.n_min, n_hi)


EQUIVALENCES = {
    # floor-form identity -> [(array identity, n -> argument of andrews_floor_sum)]
    "eq1": [("eq3", lambda n: 2 * n + 1), ("eq4", lambda n: 2 * n + 2)],
    "eq2": [("eq5", lambda n: 2 * n + 2), ("eq6", lambda n: 2 * n + 1)],
}


def check_equivalence(pair: str, n_lo: int, n_hi: int) -> VerifyReport:
    """Compare a floor-form sum with its two array-sum counterparts pointwise.

    ``pair`` is ``"eq1"`` (against eq3/eq4) or ``"eq2"`` (against eq5/eq6).
    """
    if pair not in EQUIVALENCES:
        raise UnknownIdentityError(f"no equivalence registered for {pair!r}")
    if n_lo < 0 or n_lo > n_hi:
        raise ValueError(f"invalid range {n_lo}..{n_hi}")
    variant = "one" if pair == "eq1" else "two"
    targets = EQUIVALENCES[pair]
    label = pair + "~" + "&".join(t for t, _ in targets)
    for n in range(n_lo, n_hi + 1):
        for target, arg in targets:
            lhs = andrews_floor_sum(arg(n), variant)
            rhs = get_identity(target).rhs(n)
            if lhs != rhs:
                return VerifyReport(label, n_lo, n_hi, Counterexample(n, lhs, rhs, target))
    return VerifyReport(label, n_lo, n_hi)


def embedding_doubling_check(n_lo: int, n_hi: int) -> VerifyReport:
    """Full-row residue sums on the odd embedding equal twice the one-sided Catalan sums."""
    if n_lo < 1 or n_lo > n_hi:
        raise ValueError(f"invalid range {n_lo}..{n_hi}")
    rows = _rows_for(catalan_embedding_spec())
    for n in range(n_lo, n_hi + 1):
        row = rows.row(n)
        by_residue = [Fraction(0)] * 5
        for k, v in row.items():
            by_residue[k % 5] += v
        for (first, second), one_sided in (((1, 4), _catalan_rhs(1, 4)), ((2, 3), _catalan_rhs(2, 3))):
            lhs = by_residue[first] - by_residue[second]
            rhs = 2 * one_sided(n)
            if lhs != rhs:
                return VerifyReport("embedding_doubling", n_lo, n_hi,
                                    Counterexample(n, lhs, rhs, f"residues ({first},{second})"))
    return VerifyReport("embedding_doubling", n_lo, n_hi)
