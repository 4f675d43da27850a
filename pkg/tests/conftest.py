import pytest

from coxquandle import CoxeterGroup, catalog

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): numbered acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _CRITERIA[n] = (title, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, outcome = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {outcome}  {title}")


_GROUPS: dict = {}


@pytest.fixture(scope="session")
def group():
    """Cached factory: group(name, engine='auto')."""
    def make(name, engine="auto"):
        key = (name, engine)
        if key not in _GROUPS:
            _GROUPS[key] = CoxeterGroup(catalog(name), engine=engine)
        return _GROUPS[key]
    return make
