import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cleanring.search import default_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [e for e in corpus if e.ring.size <= 36]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when == "call" or (outcome == "error" and "criterion" in props):
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for text, verdict in sorted(lines):
            number, _, title = text.partition(" ")
            terminalreporter.write_line(f"criterion {number} {verdict}  {title}")
