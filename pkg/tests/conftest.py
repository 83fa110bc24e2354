import pytest

from schroder_lab import PathSpec, decode, parse_code


@pytest.fixture
def path_of():
    """Build a path from a code string, e.g. ``path_of("0,0~,2", n=3, d=2, r=2)``."""
    def make(code, n, d, r=1, mode="integer", h=None):
        return decode(parse_code(code), PathSpec(n, d, r, mode, h))
    return make


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
