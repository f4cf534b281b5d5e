from itertools import product

import pytest

from fibarrays.classic_arrays import (
    EVEN_PASCAL,
    ODD_PASCAL,
    binomial,
    catalan_B,
    catalan_embedding_spec,
    catalan_number,
    fibonacci,
    pascal_alt_row,
    trinomial,
)
from fibarrays.seq_core import build_array


def test_fibonacci():
    assert [fibonacci(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ValueError):
        fibonacci(-1)


def test_binomial():
    assert binomial(3, 1) == 3
    assert binomial(7, 3) == 35
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(0, 0) == 1


def _pascal_rule(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def test_binomial_against_pascal_rule():
    for n in range(40):
        assert [binomial(n, k) for k in range(-2, n + 3)] == [0, 0] + _pascal_rule(n) + [0, 0]


def test_pascal_alt_rows():
    r = pascal_alt_row(2, "odd")
    assert (r.min_offset, r.values) == (-2, (1, 5, 10, 10, 5, 1))
    r = pascal_alt_row(0, "odd")
    assert (r.min_offset, r.values) == (0, (1, 1))
    r = pascal_alt_row(1, "even")
    assert (r.min_offset, r.values) == (-1, (1, 2, 1))
    with pytest.raises(ValueError):
        pascal_alt_row(1, "both")


def test_pascal_alt_rows_match_banded_build():
    odd = build_array(ODD_PASCAL, 30)
    even = build_array(EVEN_PASCAL, 30)
    for n in range(31):
        assert odd[n] == pascal_alt_row(n, "odd")
        assert even[n] == pascal_alt_row(n, "even")


@pytest.mark.parametrize("method", ["recurrence", "poly", "altsum"])
def test_trinomial_values(method):
    assert trinomial(2, 0, method) == 3
    assert trinomial(5, 0, method) == 51
    assert trinomial(4, -4, method) == 1
    assert trinomial(3, 4, method) == 0
    assert [trinomial(4, k, method) for k in range(-4, 5)] == [1, 4, 10, 16, 19, 16, 10, 4, 1]


def test_trinomial_methods_agree():
    for n in range(31):
        for k in range(-n - 1, n + 2):
            vals = {trinomial(n, k, m) for m in ("recurrence", "poly", "altsum")}
            assert len(vals) == 1, (n, k, vals)


def test_trinomial_symmetry_and_row_sum():
    for n in range(40):
        assert all(trinomial(n, k) == trinomial(n, -k) for k in range(n + 1))
        assert sum(trinomial(n, k) for k in range(-n, n + 1)) == 3 ** n


def test_trinomial_unknown_method():
    with pytest.raises(ValueError):
        trinomial(2, 0, "fft")


def test_catalan_B_values():
    assert catalan_B(3, 1) == 5
    assert catalan_B(5, 3) == 27
    assert [catalan_B(n, n) for n in range(1, 11)] == [1] * 10
    assert catalan_B(4, 5) == 0
    assert catalan_B(4, 0) == 0
    assert catalan_B(4, -2) == 0


def test_catalan_numbers():
    assert catalan_number(1) == 1
    assert catalan_number(3) == 5
    assert catalan_number(6) == 132
    assert all(catalan_number(n) == catalan_B(n, 1) for n in range(1, 40))


def test_catalan_recurrences():
    for n, k in product(range(2, 30), range(1, 30)):
        if k > n:
            continue
        if k >= 2:
            expected = catalan_B(n - 1, k - 1) + 2 * catalan_B(n - 1, k) + catalan_B(n - 1, k + 1)
        else:
            expected = 2 * catalan_B(n - 1, 1) + catalan_B(n - 1, 2)
        assert catalan_B(n, k) == expected


def test_embedding():
    spec = catalan_embedding_spec()
    assert spec.seed.as_dict() == {-1: -1, 1: 1}
    assert spec.seed_index == 1
    assert (spec.alpha, spec.beta) == (1, 2)
    rows = build_array(spec, 30)
    assert (rows[1].min_offset, rows[1].values) == (-2, (-1, -2, 0, 2, 1))
    assert rows[5][3] == 110
    assert [int(v) for v in rows[5].values[6:]] == [0, 132, 165, 110, 44, 10, 1]
    for i, row in enumerate(rows):
        n = i + 1
        assert row[0] == 0
        for k in range(1, n + 1):
            assert row[k] == catalan_B(n, k)
