import pytest

from cycert.jacobian import Arrangement


@pytest.fixture(scope="session")
def x0():
    arr = Arrangement.reference()
    for p in range(4):
        arr.basis(p)
    return arr


_criteria: dict = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.failed:
        _criteria[name] = (report.passed and _criteria.get(name, (True,))[0], report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        ok, secs = _criteria[name]
        label = name[len("test_criterion_"):].replace("_", " ")
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}  ({secs:.1f}s)")
