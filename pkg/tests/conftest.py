import pytest

from mapsym.generators import generated_maps
from mapsym.symmetry import automorphisms, flag_orbits

_acceptance_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        # parametrized criteria pass only if every case passes
        previous = _acceptance_results.get(number, (title, "passed"))[1]
        outcome = report.outcome if previous == "passed" else previous
        _acceptance_results[number] = (title, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_results):
        title, outcome = _acceptance_results[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")


class CorpusMap:
    def __init__(self, name, fs):
        self.name = name
        self.fs = fs
        self.group = automorphisms(fs)
        self.orbits = flag_orbits(fs)

    @property
    def k(self):
        return self.orbits.orbit_count


@pytest.fixture(scope="session")
def corpus():
    """Every generated map with its automorphism group, computed once."""
    return [CorpusMap(name, fs) for name, fs in generated_maps().items()]


@pytest.fixture(scope="session")
def four_orbit_corpus(corpus):
    return [m for m in corpus if m.k == 4]
