from functools import lru_cache

import pytest

from permschemes.perm import Basis
from permschemes.scheme import Frontier, build_scheme

FIXTURE_BASES = [
    "", "132", "123", "1234", "1342,1432", "2143,3412", "3421,4231,4312,4321",
    "1234,2143", "1432,2341", "2341,4321", "2143,4123", "3241,4231", "3421,4321",
]
HEXAGON = "321,46718235,46781235,56718234,56781234"


@lru_cache(maxsize=None)
def scheme_for(basis_text: str, max_depth: int = 6):
    result = build_scheme(Basis(basis_text), max_depth)
    assert not isinstance(result, Frontier), str(result)
    return result


@pytest.fixture(params=FIXTURE_BASES, ids=lambda b: b or "empty")
def fixture_basis(request):
    return request.param


_ACCEPTANCE: dict[str, dict[str, bool]] = {}


def pytest_runtest_logreport(report):
    # test_cNN_... functions roll up into criterion NN
    if "test_acceptance.py" not in report.nodeid or report.when != "call":
        return
    name = report.nodeid.split("::")[-1].split("[")[0]
    criterion = name.split("_")[1]
    tests = _ACCEPTANCE.setdefault(criterion, {})
    tests[name] = tests.get(name, True) and not report.failed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE):
        tests = _ACCEPTANCE[criterion]
        failed = [t for t, ok in tests.items() if not ok]
        line = f"{'FAIL' if failed else 'PASS'}  criterion {int(criterion[1:])}"
        if failed:
            line += "  (failing: " + ", ".join(failed) + ")"
        terminalreporter.write_line(line)
