"""Two-tailed rows, banded arrays and signed periodic diagonal sums.

A banded array is generated from a finitely supported seed row by the
stencil ``s(n, k) = a*s(n-1, k-1) + b*s(n-1, k) + a*s(n-1, k+1)``.  For
period 5 the signed diagonal sums

    d_n = sum_j [ s(n, k0 - 5j) - s(n, k0 - 5j - k1) ]

obey ``d_n = (2b - a) d_{n-1} + (ab + a^2 - b^2) d_{n-2}``; everything here
works over :class:`fractions.Fraction` so that claim is an exact equality.
"""
from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

THEOREM_PERIOD = 5


class TheoremScopeError(ValueError):
    """Raised when a recurrence check is requested outside period 5."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class TwoTailedRow:
    """Finitely supported map ``k -> value`` stored as a contiguous slice.

    ``values[i]`` is the value at ``k = min_offset + i``.  Rows are always
    trimmed so the first and last stored values are nonzero; the zero row is
    ``TwoTailedRow(0, ())``.
    """

    min_offset: int = 0
    values: tuple[Fraction, ...] = ()

    def __post_init__(self):
        vals = [_frac(v) for v in self.values]
        lo, hi = 0, len(vals)
        while lo < hi and vals[lo] == 0:
            lo += 1
        while hi > lo and vals[hi - 1] == 0:
            hi -= 1
        offset = self.min_offset + lo if lo < hi else 0
        object.__setattr__(self, "min_offset", int(offset))
        object.__setattr__(self, "values", tuple(vals[lo:hi]))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, object]) -> "TwoTailedRow":
        nz = {int(k): _frac(v) for k, v in mapping.items() if v != 0}
        if not nz:
            return cls()
        lo, hi = min(nz), max(nz)
        return cls(lo, tuple(nz.get(k, Fraction(0)) for k in range(lo, hi + 1)))

    @classmethod
    def delta(cls, k: int = 0) -> "TwoTailedRow":
        return cls(k, (Fraction(1),))

    @property
    def is_zero(self) -> bool:
        return not self.values

    @property
    def max_offset(self) -> int:
        """Last offset in the support (``min_offset - 1`` for the zero row)."""
        return self.min_offset + len(self.values) - 1

    def support(self) -> tuple[int, int] | None:
        if self.is_zero:
            return None
        return self.min_offset, self.max_offset

    def value_at(self, k: int) -> Fraction:
        i = k - self.min_offset
        if 0 <= i < len(self.values):
            return self.values[i]
        return Fraction(0)

    __getitem__ = value_at

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Yield ``(k, value)`` over the stored span, zeros inside it included."""
        for i, v in enumerate(self.values):
            yield self.min_offset + i, v

    def as_dict(self) -> dict[int, Fraction]:
        return {k: v for k, v in self.items() if v != 0}

    def __add__(self, other: "TwoTailedRow") -> "TwoTailedRow":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_offset, other.min_offset)
        hi = max(self.max_offset, other.max_offset)
        return TwoTailedRow(lo, tuple(self[k] + other[k] for k in range(lo, hi + 1)))

    def scale(self, c) -> "TwoTailedRow":
        c = _frac(c)
        return TwoTailedRow(self.min_offset, tuple(c * v for v in self.values))

    def shift(self, t: int) -> "TwoTailedRow":
        """Row ``k -> self[k - t]``."""
        return TwoTailedRow(self.min_offset + t, self.values)


@dataclass(frozen=True)
class ArraySpec:
    alpha: Fraction
    beta: Fraction
    seed: TwoTailedRow = field(default_factory=TwoTailedRow)
    seed_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alpha", _frac(self.alpha))
        object.__setattr__(self, "beta", _frac(self.beta))
        if not isinstance(self.seed, TwoTailedRow):
            object.__setattr__(self, "seed", TwoTailedRow.from_mapping(self.seed))
        if self.seed_index < 0:
            raise ValueError(f"seed_index must be >= 0, got {self.seed_index}")


@dataclass(frozen=True)
class SumSpec:
    """Anchor ``k0``, gap ``k1`` and period of a signed diagonal sum."""

    k0: int = 0
    k1: int = 1
    period: int = THEOREM_PERIOD

    def __post_init__(self):
        if self.k1 < 1:
            raise ValueError(f"gap k1 must be a positive integer, got {self.k1}")
        if self.period < 1:
            raise ValueError(f"period must be a positive integer, got {self.period}")
        if self.k1 >= self.period:
            warnings.warn(
                f"gap k1={self.k1} >= period={self.period}: the sum partially telescopes",
                stacklevel=3,
            )

    def decompose(self) -> list["SumSpec"]:
        """Split a gap-k1 sum into k1 gap-1 sums at anchors k0, k0-1, ..."""
        return [SumSpec(self.k0 - i, 1, self.period) for i in range(self.k1)]


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """``d_n = c1*d_{n-1} + c2*d_{n-2}``."""

    c1: Fraction
    c2: Fraction

    def apply(self, d1, d2) -> Fraction:
        return self.c1 * d1 + self.c2 * d2


@dataclass(frozen=True)
class Counterexample:
    n: int
    lhs: object
    rhs: object
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an exact check over ``n_lo..n_hi``.

    ``counterexample`` is the smallest failing n, or ``None`` on success.
    """

    id: str
    n_lo: int
    n_hi: int
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "counterexample"

    def to_dict(self) -> dict:
        out = {"id": self.id, "n_lo": self.n_lo, "n_hi": self.n_hi, "status": self.status}
        if self.counterexample is not None:
            ce = self.counterexample
            out["counterexample"] = {"n": ce.n, "lhs": str(ce.lhs), "rhs": str(ce.rhs)}
            if ce.detail:
                out["counterexample"]["detail"] = ce.detail
        return out


def step_row(row: TwoTailedRow, alpha, beta) -> TwoTailedRow:
    if row.is_zero:
        return row
    a, b = _frac(alpha), _frac(beta)
    v = row.values
    m = len(v)
    zero = Fraction(0)
    # output position i holds k = min_offset - 1 + i, i.e. input indices i-2, i-1, i
    out = []
    for i in range(m + 2):
        left = v[i - 2] if 0 <= i - 2 < m else zero
        mid = v[i - 1] if 0 <= i - 1 < m else zero
        right = v[i] if i < m else zero
        out.append(a * (left + right) + b * mid)
    return TwoTailedRow(row.min_offset - 1, tuple(out))


def build_array(spec: ArraySpec, n_max: int) -> list[TwoTailedRow]:
    """Rows ``seed_index..n_max`` of the array; element ``i`` is row ``seed_index + i``."""
    if n_max < spec.seed_index:
        raise ValueError(f"n_max={n_max} is below seed_index={spec.seed_index}")
    rows = [spec.seed]
    for _ in range(spec.seed_index, n_max):
        rows.append(step_row(rows[-1], spec.alpha, spec.beta))
    return rows


class RowCache:
    """Append-only memo of successive rows of one array; safe to share between threads."""

    def __init__(self, spec: ArraySpec):
        self.spec = spec
        self._rows = [spec.seed]
        self._lock = threading.Lock()

    def row(self, n: int) -> TwoTailedRow:
        i = n - self.spec.seed_index
        if i < 0:
            raise ValueError(f"row {n} precedes the seed row {self.spec.seed_index}")
        with self._lock:
            while len(self._rows) <= i:
                self._rows.append(step_row(self._rows[-1], self.spec.alpha, self.spec.beta))
            return self._rows[i]


def signed_diag_sum(row: TwoTailedRow, sum_spec: SumSpec) -> Fraction:
    if row.is_zero:
        return Fraction(0)
    m, k1 = sum_spec.period, sum_spec.k1
    lo, hi = row.min_offset, row.max_offset
    # a term row(p) - row(p - k1) can be nonzero only for p in [lo, hi + k1]
    p = lo + (sum_spec.k0 - lo) % m
    total = Fraction(0)
    while p <= hi + k1:
        total += row[p] - row[p - k1]
        p += m
    return total


def d_series(spec: ArraySpec, sum_spec: SumSpec, n_max: int) -> list[Fraction]:
    """``d_n`` for ``n = seed_index..n_max`` (same indexing as :func:`build_array`)."""
    return [signed_diag_sum(r, sum_spec) for r in build_array(spec, n_max)]


def recurrence_coeffs(alpha, beta) -> RecurrenceCoeffs:
    a, b = _frac(alpha), _frac(beta)
    return RecurrenceCoeffs(2 * b - a, a * b + a * a - b * b)


def check_recurrence(
    series: Sequence, coeffs: RecurrenceCoeffs, first_n: int = 0, id: str = "recurrence"
) -> VerifyReport:
    """Check ``series[i] = c1*series[i-1] + c2*series[i-2]`` for every i >= 2.

    ``first_n`` is the label of ``series[0]`` used in the report.
    """
    for i in range(2, len(series)):
        expected = coeffs.apply(series[i - 1], series[i - 2])
        if series[i] != expected:
            return VerifyReport(
                id, first_n + 2, first_n + len(series) - 1,
                Counterexample(first_n + i, series[i], expected),
            )
    return VerifyReport(id, first_n + 2, max(first_n + 2, first_n + len(series) - 1))


def check_theorem(spec: ArraySpec, sum_spec: SumSpec, n_max: int) -> VerifyReport:
    if sum_spec.period != THEOREM_PERIOD:
        raise TheoremScopeError(
            f"theorem scope: the second-order recurrence is only established for "
            f"period {THEOREM_PERIOD}, got {sum_spec.period}; use oracles.min_recurrence "
            f"for empirical exploration"
        )
    d = d_series(spec, sum_spec, n_max)
    return check_recurrence(
        d, recurrence_coeffs(spec.alpha, spec.beta), spec.seed_index, id="theorem"
    )


def parse_row(text: str) -> TwoTailedRow:
    """Parse ``"k:v,k:v"`` (values exact rationals) into a row; ``""`` is the zero row."""
    mapping: dict[int, Fraction] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        k, sep, v = part.partition(":")
        if not sep:
            raise ValueError(f"bad seed entry {part!r}, expected k:v")
        key = int(k)
        if key in mapping:
            raise ValueError(f"duplicate offset {key} in seed")
        mapping[key] = parse_rational(v)
    return TwoTailedRow.from_mapping(mapping)


def parse_rational(text: str) -> Fraction:
    """Exact parse of ``[+-]p`` or ``[+-]p/q``; decimals and exponents are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    body = num[1:] if num[:1] in "+-" else num
    if not body.isdigit() or (sep and not den.isdigit()):
        raise ValueError(f"not a rational literal: {text!r}")
    if sep and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if sep else 1)

