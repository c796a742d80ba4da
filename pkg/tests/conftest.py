import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    def record(number: int, name: str, ok: bool, detail: str):
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {name}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
