"""Brute-force ground truth kept independent of the banded-array machinery."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .seq_core import TwoTailedRow

PATH_PAIR_MAX_N = 12


@dataclass(frozen=True)
class PathPairCensus:
    """Unordered pairs of non-intersecting length-``n`` paths, keyed by distance."""

    n: int
    counts: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class LinearRecurrence:
    """``d_n = sum(coefficients[i-1] * d_{n-i} for i in 1..order)``."""

    order: int
    coefficients: tuple[Fraction, ...] = ()

    def fits(self, series: Sequence) -> bool:
        c = self.coefficients
        return all(
            series[n] == sum((c[i] * series[n - 1 - i] for i in range(self.order)), Fraction(0))
            for n in range(self.order, len(series))
        )

    def describe(self) -> str:
        if self.order == 0:
            return "order 0"
        terms = []
        for i, c in enumerate(self.coefficients, start=1):
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{abs(c)} d[n-{i}]"))
        body = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            body += f" {sign} {t}"
        return f"order {self.order}: d[n] = {body}"


def _path_vertices(bits: int, n: int) -> int:
    """Bitmask of the lattice points a path visits after the origin.

    Step i goes East when bit i is set, North otherwise.  The point reached
    after i steps, ``(x, i - x)``, is encoded as bit ``i*(n+1) + x``.
    """
    mask = 0
    x = 0
    for i in range(1, n + 1):
        if bits >> (i - 1) & 1:
            x += 1
        mask |= 1 << (i * (n + 1) + x)
    return mask


def enumerate_path_pairs(n: int) -> PathPairCensus:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > PATH_PAIR_MAX_N:
        raise ValueError(f"n={n} exceeds the enumeration guard n <= {PATH_PAIR_MAX_N}")
    paths = []
    for bits in range(1 << n):
        east = bin(bits).count("1")
        paths.append((east, _path_vertices(bits, n)))
    counts: Counter[int] = Counter()
    for i, (a, va) in enumerate(paths):
        for b, vb in paths[i + 1:]:
            if not va & vb:
                counts[abs(a - b)] += 1
    return PathPairCensus(n, dict(sorted(counts.items())))


def expand_trinomial_row(n: int) -> TwoTailedRow:
    """Coefficients of ``(1 + x + x^2)**n`` recentred so ``x**(n+k)`` sits at offset k."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    poly = [1]
    for _ in range(n):
        nxt = [0] * (len(poly) + 2)
        for i, c in enumerate(poly):
            nxt[i] += c
            nxt[i + 1] += c
            nxt[i + 2] += c
        poly = nxt
    return TwoTailedRow(-n, tuple(poly))


def min_recurrence(series: Sequence, max_order: int) -> LinearRecurrence | None:
    """Shortest homogeneous recurrence generating ``series`` (Berlekamp-Massey over Q).

    Returns ``None`` when the linear complexity exceeds ``max_order``.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    if len(series) < 2 * max_order + 2:
        raise ValueError(
            f"need at least {2 * max_order + 2} terms for max_order={max_order}, got {len(series)}"
        )
    s = [Fraction(x) for x in series]
    conn = [Fraction(1)]   # connection polynomial C(x)
    prev = [Fraction(1)]   # B(x)
    length, gap, last_disc = 0, 1, Fraction(1)
    for n in range(len(s)):
        disc = s[n] + sum(conn[i] * s[n - i] for i in range(1, min(length, len(conn) - 1) + 1))
        if disc == 0:
            gap += 1
            continue
        factor = disc / last_disc
        updated = conn + [Fraction(0)] * max(0, len(prev) + gap - len(conn))
        for i, b in enumerate(prev):
            updated[i + gap] -= factor * b
        if 2 * length <= n:
            prev, conn = conn, updated
            length, last_disc, gap = n + 1 - length, disc, 1
        else:
            conn = updated
            gap += 1
    if length > max_order:
        return None
    conn = conn + [Fraction(0)] * (length + 1 - len(conn))
    rec = LinearRecurrence(length, tuple(-conn[i] for i in range(1, length + 1)))
    assert rec.fits(s), "Berlekamp-Massey result does not reproduce the window"
    return rec
