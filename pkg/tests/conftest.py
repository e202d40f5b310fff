"""Shared fixtures and the acceptance-criteria summary printer."""

from __future__ import annotations

import pytest

_acceptance_results: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    _acceptance_results.append((report.nodeid.split("::")[-1], status))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(_acceptance_results):
        terminalreporter.write_line(f"{status}  {name}")


@pytest.fixture(scope="session")
def fields():
    from ginv.field import QI_CONJ, QI_IDENT, QQ

    return (QQ, QI_CONJ, QI_IDENT)
