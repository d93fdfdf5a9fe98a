"""The acceptance gate: one test per criterion, each printing its pass/fail line.

Criterion 4 exercises the full corpus of dimension <= 8 with 20 perturbed
lifts per example and dominates the runtime of the suite (several minutes).
"""

import pytest

from hopflift import acceptance as acc


@pytest.mark.parametrize("number,name,fn", acc.CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in acc.CRITERIA])
def test_criterion(number, name, fn):
    import time

    t0 = time.perf_counter()
    passed, detail = fn()
    seconds = time.perf_counter() - t0
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] criterion {number:2d} ({seconds:6.1f}s): {name} -- {detail}")
    assert passed, f"criterion {number}: {detail}"
