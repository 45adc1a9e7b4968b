from __future__ import annotations

import shutil
from pathlib import Path

import pytest

FIXTURE_CORPUS = Path(__file__).parent / "fixtures" / "java_corpus"

_criteria: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    measured = "; ".join(f"{k}={v}" for k, v in item.user_properties)
    # one failing part fails the whole criterion
    if _criteria.get(number, ("PASS",))[0] == "FAIL":
        return
    _criteria[number] = (outcome, title, measured)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcome, title, measured = _criteria[number]
        line = f"AC{number:<2} {outcome}  {title}"
        if measured:
            line += f"  [{measured}]"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fixture_corpus() -> Path:
    return FIXTURE_CORPUS


@pytest.fixture()
def corpus_copy(tmp_path) -> Path:
    dst = tmp_path / "java_corpus"
    shutil.copytree(FIXTURE_CORPUS, dst)
    return dst
