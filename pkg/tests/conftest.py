import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
sys.path.insert(0, str(TESTS))

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def graph_path(name: str) -> Path:
    return FIXTURES / "graphs" / f"{name}.graph"


def jsj_path(name: str) -> Path:
    return FIXTURES / "jsj" / f"{name}.jsj"


def decision_matrix() -> list[tuple[str, str, bool, str]]:
    rows = []
    for line in (FIXTURES / "decision_matrix.txt").read_text().splitlines():
        line = line.split("#", 1)[0].split()
        if line:
            g, j, embeds, rule = line
            rows.append((g, j, embeds == "true", rule))
    return rows


@pytest.fixture
def record_criterion():
    """Call with (label, passed, detail); summarised after the run."""

    def record(label: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((label, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {label}" + (f"  ({detail})" if detail else ""))
