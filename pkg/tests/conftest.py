import pytest

# criterion number -> (passed, seconds, detail); filled by test_acceptance
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, secs, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} "
                                    f"({secs:.2f}s) {detail}")


@pytest.fixture
def acceptance_results():
    return ACCEPTANCE_RESULTS
