from fractions import Fraction

import pytest

from homalg.ncalg import sklyanin_algebra, sklyanin_params

# criterion number -> (passed, detail); filled by test_acceptance
RESULTS = {}


@pytest.fixture
def record():
    def _record(number, passed, detail=""):
        RESULTS[number] = (passed, detail)
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}".rstrip())
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS, key=lambda k: (int(str(k).rstrip("ab")), str(k))):
        passed, detail = RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def params():
    return sklyanin_params(Fraction(1, 4), Fraction(1, 9))


@pytest.fixture(scope="session")
def algebra():
    return sklyanin_algebra(Fraction(1, 4), Fraction(1, 9))
