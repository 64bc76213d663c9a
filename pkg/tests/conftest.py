from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from chernhilbert import KClass, TruncatedSeries

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def series(draw, bound=None, const=None):
    d = draw(st.integers(0, 6)) if bound is None else bound
    coeffs = draw(st.lists(small_fracs, min_size=d + 1, max_size=d + 1))
    if const is not None:
        coeffs[0] = Fraction(const)
    return TruncatedSeries(coeffs)


@st.composite
def series_pair(draw, count=2, const=None):
    d = draw(st.integers(0, 6))
    return tuple(draw(series(bound=d, const=const)) for _ in range(count))


@st.composite
def unit_series(draw, bound=None):
    s = draw(series(bound=bound))
    c0 = draw(small_fracs.filter(lambda c: c != 0))
    return TruncatedSeries((c0,) + s.coeffs[1:])


@st.composite
def kclasses(draw, dim=None, max_dim=8, count=1):
    d = draw(st.integers(0, max_dim)) if dim is None else dim
    out = tuple(
        KClass(d, tuple(draw(st.lists(st.integers(-20, 20), min_size=d + 1, max_size=d + 1))))
        for _ in range(count)
    )
    return out[0] if count == 1 else out


_acceptance_lines: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"{status}  criterion {marker.args[0]}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
