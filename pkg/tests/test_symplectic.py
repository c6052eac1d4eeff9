"""Symplectic forms, duals, and isotropic subspace counts."""

from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from symhex.errors import BudgetExceeded, DimensionMismatch, KOutOfRange, OddLength
from symhex.gf import LinearCode, all_vectors, random_code
from symhex.symplectic import SymplecticSpace, count_isotropic, isotropic_subspaces


def all_subspaces(p, n, k):
    """Filter method: row spaces of every k x n matrix, deduplicated."""
    out = set()
    for entries in product(range(p), repeat=k * n):
        M = np.array(entries, dtype=int).reshape(k, n)
        code = LinearCode(p, M, n=n)
        if code.k == k:
            out.add(code)
    return out


def test_inner_examples():
    sp2 = SymplecticSpace(2, 1)
    assert sp2.inner([1, 0], [0, 1]) == 1
    assert sp2.inner([0, 1], [1, 0]) == 1
    sp3 = SymplecticSpace(3, 1)
    assert sp3.inner([1, 0], [0, 1]) == 1
    assert sp3.inner([0, 1], [1, 0]) == 2  # antisymmetric: -1 mod 3


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (3, 1)])
def test_alternating_exhaustive(p, m):
    sp = SymplecticSpace(p, m)
    for v in all_vectors(p, sp.n):
        assert sp.inner(v, v) == 0


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2)])
def test_bilinear_antisymmetric_random(p, m):
    sp = SymplecticSpace(p, m)
    rng = np.random.default_rng(17)
    for _ in range(200):
        x, y, z = (rng.integers(0, p, size=sp.n) for _ in range(3))
        s = int(rng.integers(0, p))
        assert sp.inner((x + y) % p, z) == (sp.inner(x, z) + sp.inner(y, z)) % p
        assert sp.inner((s * x) % p, z) == (s * sp.inner(x, z)) % p
        assert (sp.inner(x, y) + sp.inner(y, x)) % p == 0
        assert sp.inner(x, x) == 0


def test_dual_examples():
    sp2 = SymplecticSpace(2, 1)
    c = LinearCode(2, [[1, 1]])
    assert sp2.dual(c) == c
    assert sp2.dual(LinearCode.zero(2, 2)) == LinearCode.full(2, 2)
    assert sp2.dual(LinearCode.full(2, 2)) == LinearCode.zero(2, 2)
    sp3 = SymplecticSpace(3, 1)
    assert sp3.dual(LinearCode(3, [[1, 0]])) == LinearCode(3, [[1, 0]])


def test_dual_involution_and_rank_nullity():
    rng = np.random.default_rng(19)
    for p, m in ((2, 2), (2, 3), (3, 1), (3, 2)):
        sp = SymplecticSpace(p, m)
        for _ in range(25):
            code = random_code(p, sp.n, rng)
            d = sp.dual(code)
            assert code.k + d.k == sp.n
            assert sp.dual(d) == code
            # duality is order reversing on a chain: C subset of full space
            assert all(v in LinearCode.full(p, sp.n) for v in d.gen)


def test_dual_against_definition():
    # membership in the dual means pairing to zero with every codeword
    rng = np.random.default_rng(23)
    for p, m in ((2, 1), (2, 2), (3, 1)):
        sp = SymplecticSpace(p, m)
        for _ in range(10):
            code = random_code(p, sp.n, rng)
            d = sp.dual(code)
            cw = code.codewords()
            for v in all_vectors(p, sp.n):
                expected = all(sp.inner(v, w) == 0 for w in cw)
                assert d.contains(v) == expected


def test_predicates_examples():
    sp2 = SymplecticSpace(2, 1)
    rep = LinearCode(2, [[1, 1]])
    assert sp2.is_self_orthogonal(rep)
    assert sp2.is_self_dual(rep)
    assert not sp2.is_lcd(rep)
    full = LinearCode.full(2, 2)
    assert not sp2.is_self_orthogonal(full)
    assert not sp2.is_self_dual(full)
    assert sp2.is_lcd(full)
    zero = LinearCode.zero(2, 2)
    assert sp2.is_self_orthogonal(zero)
    assert not sp2.is_self_dual(zero)
    assert sp2.is_lcd(zero)


def test_self_dual_iff_self_orthogonal_of_middle_dimension():
    rng = np.random.default_rng(29)
    for p, m in ((2, 2), (3, 1), (3, 2)):
        sp = SymplecticSpace(p, m)
        for _ in range(40):
            code = random_code(p, sp.n, rng)
            assert sp.is_self_dual(code) == (
                sp.is_self_orthogonal(code) and code.k == m
            )


def test_every_line_is_isotropic():
    # ternary length 2: all four lines are their own symplectic duals
    sp3 = SymplecticSpace(3, 1)
    for rows in ([[1, 0]], [[0, 1]], [[1, 1]], [[1, 2]]):
        c = LinearCode(3, rows)
        assert sp3.is_self_orthogonal(c)
        assert sp3.dual(c) == c


COUNT_ANCHORS = [
    (2, 1, 1, 3),
    (2, 2, 2, 15),
    (3, 1, 1, 4),
    (2, 3, 0, 1),
    (3, 2, 0, 1),
]


@pytest.mark.parametrize("p,m,k,expected", COUNT_ANCHORS)
def test_count_anchors(p, m, k, expected):
    assert count_isotropic(p, m, k) == expected


def test_count_out_of_range():
    with pytest.raises(KOutOfRange):
        count_isotropic(2, 2, 3)
    with pytest.raises(KOutOfRange):
        count_isotropic(3, 1, -1)


@pytest.mark.parametrize("p,mmax", [(2, 3), (3, 2)])
def test_enumeration_matches_formula(p, mmax):
    for m in range(mmax + 1):
        sp = SymplecticSpace(p, m)
        for k in range(m + 1):
            found = isotropic_subspaces(sp, k)
            assert len(found) == count_isotropic(p, m, k)
            assert len(set(found)) == len(found)
            for code in found:
                assert code.k == k
                assert sp.is_self_orthogonal(code)


@pytest.mark.parametrize("p,m,k", [(2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 2, 1)])
def test_enumeration_matches_filter_method(p, m, k):
    sp = SymplecticSpace(p, m)
    brute = {c for c in all_subspaces(p, sp.n, k) if sp.is_self_orthogonal(c)}
    assert set(isotropic_subspaces(sp, k)) == brute


def test_enumeration_deterministic():
    sp = SymplecticSpace(2, 2)
    a = isotropic_subspaces(sp, 2)
    b = isotropic_subspaces(sp, 2)
    assert a == b


def test_enumeration_guards():
    with pytest.raises(BudgetExceeded):
        isotropic_subspaces(SymplecticSpace(3, 4), 1)
    with pytest.raises(KOutOfRange):
        isotropic_subspaces(SymplecticSpace(2, 2), 3)


def test_length_zero_space():
    sp = SymplecticSpace(2, 0)
    assert count_isotropic(2, 0, 0) == 1
    assert isotropic_subspaces(sp, 0) == [LinearCode.zero(2, 0)]


def test_space_checks():
    with pytest.raises(OddLength):
        SymplecticSpace.for_length(2, 3)
    with pytest.raises(DimensionMismatch):
        SymplecticSpace(2, 2).dual(LinearCode(2, [[1, 1]]))
    with pytest.raises(DimensionMismatch):
        SymplecticSpace(2, 1).inner([1, 0, 0], [0, 1, 0])
