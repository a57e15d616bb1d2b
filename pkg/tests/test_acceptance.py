"""Acceptance criteria at full size.

Each test runs one self-test suite at its stated case count and requires every
case to pass.  One PASS/FAIL line per criterion is printed in the terminal
summary; running this file directly prints the same lines.
"""

import random
import time

import pytest

from chordal_braids.selftest import SUITES

SEED = 7
REPORT: list = []

CRITERIA = [
    # (number, title, suite, expected case count, time limit in seconds)
    (1, "chordality oracle equivalence", "chordality", 33868 + 500, 60),
    (2, "chromatic agreement", "chromatic", 200, 60),
    (3, "region count", "regions", 100, None),
    (4, "braid functoriality", "functoriality", 500, None),
    (5, "comb round trip", "combing", 1000 + 500, 300),
    (6, "tower exactness", "tower", 300, None),
    (7, "normal forms and pull-back square", "normal_forms", 300 + 100, None),
    (8, "complete-graph degeneration", "complete_graph", 200, None),
    (9, "rooted trees", "rooted_trees", 100, None),
]


def run_criterion(number, title, suite, expected, limit):
    t0 = time.perf_counter()
    res = SUITES[suite](random.Random(f"{SEED}:{suite}"))
    elapsed = time.perf_counter() - t0
    ok = res.ok and res.total == expected and (limit is None or elapsed < limit)
    bound = f", limit {limit}s" if limit else ""
    line = (
        f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): "
        f"{res.passed}/{res.total} cases, {elapsed:.1f}s{bound}"
    )
    REPORT.append(line)
    return ok, res, elapsed, line


@pytest.mark.parametrize(
    "number,title,suite,expected,limit", CRITERIA, ids=[c[2] for c in CRITERIA]
)
def test_criterion(number, title, suite, expected, limit):
    ok, res, elapsed, line = run_criterion(number, title, suite, expected, limit)
    print(line)
    assert res.total == expected, line
    assert res.ok, f"{line}; first failures: {res.failures}"
    if limit is not None:
        assert elapsed < limit, line


if __name__ == "__main__":
    for c in CRITERIA:
        print(run_criterion(*c)[3], flush=True)
