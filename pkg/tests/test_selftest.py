from __future__ import annotations

import random

import pytest

from iwahori.selftest import CHECKS, _run_one


@pytest.mark.parametrize("check", CHECKS, ids=lambda f: f.__name__[len("check_"):])
def test_check_passes_with_another_seed(check):
    check(random.Random(12345))


def test_failures_are_reported_not_raised():
    def check_broken(rng):
        raise ValueError("boom")

    saved = CHECKS[0]
    CHECKS[0] = check_broken
    try:
        rec = _run_one((0, 0))
    finally:
        CHECKS[0] = saved
    assert rec == {"name": "broken", "pass": False, "detail": "ValueError: boom"}
