"""Shared fixtures and the acceptance-criteria terminal summary."""

import pytest

# criterion number -> (passed, detail); a recorded failure sticks
_criteria = {}


def _record(number, passed, detail):
    prior = _criteria.get(number)
    if prior is not None and not prior[0]:
        return
    _criteria[number] = (bool(passed), detail)


@pytest.fixture
def criterion():
    """Recorder: criterion(number, passed, detail)."""
    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, detail = _criteria[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} - {detail}")
