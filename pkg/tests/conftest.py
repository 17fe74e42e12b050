import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: (int(s.split()[1].rstrip(":")), s)):
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line():
    def record(tag: str, passed: bool, detail: str = "", label: str | None = None) -> None:
        label = label or ("PASS" if passed else "FAIL")
        ACCEPTANCE_LINES.append(f"criterion {tag}: {label}" + (f"  {detail}" if detail else ""))

    return record
