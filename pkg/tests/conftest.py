import pytest

from regdigraph.enumerate import enumerate_unlabeled


@pytest.fixture(scope="session")
def records_by_n():
    """All classes of 2-regular digraphs for n = 0..7, enumerated once per session."""
    return {n: enumerate_unlabeled(n, 2) for n in range(0, 8)}


def random_two_regular(rng, n):
    from regdigraph.core import Digraph

    adj = [[0] * n for _ in range(n)]
    for _ in range(2):
        perm = list(range(n))
        rng.shuffle(perm)
        for i, j in enumerate(perm):
            adj[i][j] += 1
    return Digraph.from_rows(adj)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        state = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        prev = _criteria.get(key)
        if prev in (None, "PASS") or state == "FAIL":
            _criteria[key] = state if prev != "FAIL" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), state in sorted(_criteria.items()):
        terminalreporter.write_line(f"[{state}] criterion {number}: {title}")
