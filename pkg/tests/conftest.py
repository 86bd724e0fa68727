from __future__ import annotations

import os

import pytest

# Keep the test run away from the user's cache directory.
os.environ["SGP_CACHE"] = ""

from sgpstar.semigroup import make_semigroup  # noqa: E402

CORPUS = [(1,), (2, 3), (3, 4), (3, 5, 7), (4, 5, 6), (5, 7, 9, 11, 13)]
SMALL = [(1,), (2, 3), (3, 4), (3, 5, 7), (3, 4, 5), (4, 5, 6), (3, 7, 8)]


@pytest.fixture
def s357():
    return make_semigroup([3, 5, 7])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[k])
