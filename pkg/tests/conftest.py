import pytest

# criterion number -> (title, passed); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def record_criterion():
    def record(num: int, title: str, errors: list) -> None:
        ok = not errors
        ACCEPTANCE[num] = (title, ok)
        print(f"criterion {num} {'PASS' if ok else 'FAIL'}: {title}")
        assert ok, "\n".join(map(str, errors[:20]))

    return record
