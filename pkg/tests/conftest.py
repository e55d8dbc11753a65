import itertools

import pytest


def small_params(limit=64, n_max=6, d_max=9):
    return [
        (n, d)
        for n in range(1, n_max + 1)
        for d in range(2, d_max + 1)
        if (d - 1) ** n <= limit
    ]


def brute_pairing(i, j):
    """Four-clause definition, written out independently of the library."""
    diffs = [a - b for a, b in zip(i, j)]
    if any(abs(x) >= 2 for x in diffs):
        return 0
    if any(x * y < 0 for x, y in itertools.product(diffs, repeat=2)):
        return 0
    if all(x == 0 for x in diffs):
        return -2
    return -1


@pytest.fixture(scope="session")
def pres23():
    from discgroups import present

    return present((2, 3))


@pytest.fixture(scope="session")
def pres33():
    from discgroups import present

    return present((3, 3))


# acceptance reporting: one line per criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
