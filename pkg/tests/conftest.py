import numpy as np
import pytest

from cyclocode.code import validate_spec
from cyclocode.field import build_base_field, build_extension

TOWERS = [(2, 1, 3), (2, 2, 2), (2, 2, 3), (3, 1, 3), (3, 2, 2), (5, 1, 2), (7, 1, 2), (3, 1, 4)]


@pytest.fixture(params=TOWERS, ids=lambda t: f"p{t[0]}e{t[1]}k{t[2]}")
def tower(request):
    p, e, k = request.param
    base = build_base_field(p, e)
    return base, build_extension(base, k)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def spec(*params):
    return validate_spec(*params)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
