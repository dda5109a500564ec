import itertools

import pytest

_acceptance: dict[str, list[tuple[str, str]]] = {}


def brute_force_coefficient(n: int, l: int, m: int) -> int:
    """Count tuples in {0..n}^l summing to m by enumeration."""
    return sum(1 for t in itertools.product(range(n + 1), repeat=l) if sum(t) == m)


@pytest.fixture
def brute():
    return brute_force_coefficient


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = dict(report.user_properties).get("acceptance")
    if marker is None:
        return
    ident, summary = marker
    _acceptance.setdefault(ident, []).append((summary, report.outcome))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        item.user_properties.append(("acceptance", marker.args))


def _criterion_order(ident: str):
    digits = "".join(ch for ch in ident if ch.isdigit())
    return int(digits), ident


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for ident in sorted(_acceptance, key=_criterion_order):
        results = _acceptance[ident]
        outcomes = {outcome for _, outcome in results}
        if "failed" in outcomes:
            status = "FAIL"
        elif outcomes == {"skipped"}:
            status = "SKIP"
        else:
            status = "PASS"
        summary = results[0][0]
        if len(results) > 1:
            summary += f" [{len(results)} cases]"
        terminalreporter.write_line(f"[{status}] AC{ident}: {summary}")
