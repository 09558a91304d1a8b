import pytest

from usteen import PrimeContext

_ACCEPTANCE = []


@pytest.fixture
def ctx3():
    return PrimeContext(3)


@pytest.fixture(params=[3, 5, 7], ids=lambda p: f"p{p}")
def ctx(request):
    return PrimeContext(request.param)


@pytest.fixture
def record_criterion():
    def record(number, title, passed, elapsed, detail=""):
        _ACCEPTANCE.append((number, title, passed, elapsed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, elapsed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number:>2}: {title} ({elapsed:.2f}s)"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
