"""Named (datum, twist) pairs used by the self-test and the test suite."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .data import gl, inner_twist, restriction_of_scalars, sp4, unitary_twist
from .frobenius import FrobeniusTwist, split_twist
from .weyl import omega_element, sort_key


@lru_cache(maxsize=None)
def twist_fixtures() -> dict[str, FrobeniusTwist]:
    out = {}
    for n in (2, 3):
        d = gl(n)
        out[f"split-GL{n}"] = split_twist(d)
        out[f"unitary-GL{n}"] = unitary_twist(d)
        out[f"inner-GL{n}"] = inner_twist(d)
        out[f"res2-GL{n}"] = restriction_of_scalars(d, None, 2)[1]
    out["split-Sp4"] = split_twist(sp4())
    return out


def fixture(name: str) -> FrobeniusTwist:
    return twist_fixtures()[name]


def omega_window(datum, radius: int = 1) -> list:
    """Length-zero elements of the components of t_lam, lam in the box [-radius, radius]^r."""
    seen = {
        omega_element(datum, lam)
        for lam in itertools.product(range(-radius, radius + 1), repeat=datum.lattice_rank)
    }
    return sorted(seen, key=sort_key)


def dominant_in_box(datum, lo: int, hi: int) -> list[tuple]:
    return [
        lam
        for lam in itertools.product(range(lo, hi + 1), repeat=datum.lattice_rank)
        if datum.is_dominant(lam)
    ]
