import pytest

from maxstn.generators import gen_example_greedy, gen_example_star, gen_random, gen_tight

ACCEPTANCE_LINES = []


@pytest.fixture
def star_inst():
    return gen_example_star()


@pytest.fixture
def greedy_inst():
    return gen_example_greedy()


@pytest.fixture
def tight6():
    return gen_tight(6, 0.01)


@pytest.fixture(scope="session")
def random_instances():
    out = []
    for seed in range(60):
        n = 2 + seed % 6
        out.append(gen_random(n, 3, 2 + seed % 2, seed))
    return out


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
