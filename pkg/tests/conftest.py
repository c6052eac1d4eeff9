"""Shared fixtures: component-pair surfaces reused by the acceptance checks."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from symhex.gf import LinearCode, random_code
from symhex.ring import RingId


def all_subspaces(p: int, n: int) -> list[LinearCode]:
    """Every subspace of F_p^n, by brute rref dedup.  Tiny n only."""
    seen: dict[tuple, LinearCode] = {}
    for k in range(n + 1):
        for entries in itertools.product(range(p), repeat=k * n):
            rows = [list(entries[i * n : (i + 1) * n]) for i in range(k)]
            code = LinearCode(p, rows, n=n)
            seen.setdefault((code.k, code.gen.tobytes()), code)
    return sorted(seen.values(), key=lambda c: (c.k, c.gen.tobytes()))


@pytest.fixture(scope="session")
def pair_surface_n2() -> list[tuple[LinearCode, LinearCode]]:
    """All 30 component pairs at length 2: 5 binary x 6 ternary subspaces."""
    return [
        (ca, cb)
        for ca in all_subspaces(2, 2)
        for cb in all_subspaces(3, 2)
    ]


@pytest.fixture(scope="session")
def pair_surface_n4() -> dict[RingId, list[tuple[LinearCode, LinearCode]]]:
    """200 seeded random component pairs at length 4 for each ring."""
    rng = np.random.default_rng(20260822)
    return {
        ring: [(random_code(2, 4, rng), random_code(3, 4, rng)) for _ in range(200)]
        for ring in (RingId.H23, RingId.H32)
    }
