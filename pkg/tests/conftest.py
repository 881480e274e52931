import hypothesis
import pytest

from algoprob.experiment import ExperimentConfig, compute_distribution

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("ci")


@pytest.fixture(scope="session")
def tm22_100():
    return compute_distribution(ExperimentConfig(system="tm", states=2, steps=100, k=4, threads=1))


@pytest.fixture(scope="session")
def tm22_500():
    return compute_distribution(ExperimentConfig(system="tm", states=2, steps=500, k=4, threads=1))


@pytest.fixture(scope="session")
def eca_100():
    return compute_distribution(ExperimentConfig(system="ca", left=1, right=1, steps=100, k=4, threads=1))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
