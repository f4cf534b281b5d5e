from fractions import Fraction

from hypothesis import strategies as st

from fibarrays.seq_core import ArraySpec, SumSpec, TwoTailedRow

small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)


@st.composite
def rows(draw, max_width=9):
    values = draw(st.lists(small_rationals, max_size=max_width))
    return TwoTailedRow(draw(st.integers(-12, 12)), tuple(values))


@st.composite
def array_specs(draw):
    return ArraySpec(draw(small_rationals), draw(small_rationals), draw(rows()))


@st.composite
def theorem_sums(draw):
    return SumSpec(draw(st.integers(-15, 15)), draw(st.integers(1, 4)))


def brute_diag_sum(row, k0, k1, period=5, j_range=60):
    """Definition-level signed diagonal sum over a generous window of j."""
    total = Fraction(0)
    for j in range(-j_range, j_range + 1):
        total += row.value_at(k0 - period * j) - row.value_at(k0 - period * j - k1)
    return total


_acceptance_results = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.failed):
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
