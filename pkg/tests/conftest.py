import itertools
import random

import pytest

from cyclecount.graph import LabeledGraph

CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, verdict = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")


def seeded_graph(seed: int, n_min: int = 1, n_max: int = 8) -> LabeledGraph:
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.15, 0.85)
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    return LabeledGraph.from_edges(n, edges)


@pytest.fixture(scope="session")
def full_report():
    from cyclecount.claims import verify

    return verify()
