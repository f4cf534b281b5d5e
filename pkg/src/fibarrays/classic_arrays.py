"""Fibonacci numbers, binomials, alternate-row Pascal arrays, trinomials, Catalan's triangle."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Literal

from . import oracles
from .seq_core import ArraySpec, RowCache, TwoTailedRow

ODD_PASCAL = ArraySpec(1, 2, TwoTailedRow(0, (1, 1)))
EVEN_PASCAL = ArraySpec(1, 2, TwoTailedRow(0, (1,)))
TRINOMIAL = ArraySpec(1, 1, TwoTailedRow(0, (1,)))


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def binomial(n: int, k: int) -> int:
    """C(n, k), zero for k outside 0..n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pascal_alt_row(n: int, parity: Literal["odd", "even"]) -> TwoTailedRow:
    """Row n of Pascal's triangle with every other row removed.

    ``odd``: ``k -> C(2n+1, n+k)`` on ``-n..n+1``; ``even``: ``k -> C(2n, n+k)`` on ``-n..n``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if parity == "odd":
        top = 2 * n + 1
    elif parity == "even":
        top = 2 * n
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    return TwoTailedRow(-n, tuple(math.comb(top, j) for j in range(top + 1)))


_trinomial_rows = RowCache(TRINOMIAL)


def trinomial_row(n: int) -> TwoTailedRow:
    """Row n of the trinomial array built by the three-term recurrence."""
    return _trinomial_rows.row(n)


def _trinomial_altsum(n: int, k: int) -> int:
    return sum((-1) ** j * math.comb(n, j) * binomial(2 * n - 2 * j, n - j - k) for j in range(n + 1))


def trinomial(n: int, k: int, method: Literal["recurrence", "poly", "altsum"] = "recurrence") -> int:
    """Coefficient of ``x**(n+k)`` in ``(1 + x + x^2)**n``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if abs(k) > n:
        return 0
    if method == "recurrence":
        value = trinomial_row(n)[k]
    elif method == "poly":
        value = oracles.expand_trinomial_row(n)[k]
    elif method == "altsum":
        return _trinomial_altsum(n, k)
    else:
        raise ValueError(f"unknown trinomial method {method!r}")
    return int(value)


def catalan_B(n: int, k: int) -> int:
    """Entry B(n, k) = (k/n) C(2n, n-k) of Catalan's triangle; 0 unless 1 <= k <= n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1 or k > n:
        return 0
    value = Fraction(k, n) * math.comb(2 * n, n - k)
    assert value.denominator == 1
    return int(value)


def catalan_number(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def catalan_embedding_spec() -> ArraySpec:
    """Odd extension of Catalan's triangle: row 1 is ``s(1, +-1) = +-1``, stencil (1, 2, 1)."""
    return ArraySpec(1, 2, TwoTailedRow.from_mapping({-1: -1, 1: 1}), seed_index=1)
