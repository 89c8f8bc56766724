from __future__ import annotations

import pytest

from covforge.sl2 import context

# criterion number -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def ctx7():
    return context(7)


@pytest.fixture(scope="session")
def replayed():
    """Registry rebuilt from the printed d=7 construction lists, plus the replay report."""
    from covforge.discover import replay_paper_constructions

    return replay_paper_constructions()


@pytest.fixture(scope="session")
def reg13(replayed):
    return replayed[0].truncated(13)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
