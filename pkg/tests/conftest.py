import pytest

from monext import kernels
from monext.enumeration import census_2x2
from monext.action import functor_Q


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def census():
    return census_2x2()


@pytest.fixture(scope="session")
def realizations(census):
    return [functor_Q(e.system) for e in census]


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda l: int(l.split()[2][:-1])):
            terminalreporter.write_line(line)
