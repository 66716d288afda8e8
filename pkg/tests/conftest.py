import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from erdos_straus.core import enumerate_nontrivial
from erdos_straus.integer_kernel import primes_between


@pytest.fixture(scope="session")
def oracle_below_1000():
    """{p: non-trivial solutions} for every odd prime p < 1000."""
    return {p: enumerate_nontrivial(p) for p in primes_between(3, 999)}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
