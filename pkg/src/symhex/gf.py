"""Exact linear algebra over the prime fields F2 and F3.

Everything is dense numpy with entries reduced mod p.  A LinearCode is a
row space held as its reduced row echelon form, which is unique per row
space, so code equality is literal array equality.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch

# ceiling for materializing codeword lists: 3**12 vectors
CODEWORD_BUDGET = 3**12


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form mod p; returns (R, pivot columns).

    Zero rows are dropped, pivots are 1, and pivot columns are cleared
    above and below.  R is read-only.
    """
    M = np.array(mat, dtype=np.int64) % p
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {M.shape}")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, p)) % p
        for r2 in range(rows):
            if r2 != r and M[r2, c]:
                M[r2] = (M[r2] - M[r2, c] * M[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    R = M[:r].astype(np.int8)
    R.flags.writeable = False
    return R, tuple(pivots)


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of {v : mat @ v == 0 mod p}, as rows in RREF."""
    M = np.asarray(mat)
    cols = M.shape[1]
    R, pivots = rref(M, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-R[r, fc]) % p
    B, _ = rref(basis, p)
    return B


class LinearCode:
    """A linear code over F_p of length n, stored as its RREF generator.

    The zero code (k = 0) and the full space (k = n) are ordinary values.
    Instances are immutable and hashable; two codes compare equal exactly
    when they have the same row space.
    """

    __slots__ = ("p", "n", "k", "gen", "pivots")

    def __init__(self, p: int, rows, n: Optional[int] = None):
        if p not in (2, 3):
            raise ValueError(f"p must be 2 or 3, got {p}")
        M = np.array(rows, dtype=np.int64)
        if M.size == 0:
            if n is None:
                if M.ndim == 2:
                    n = M.shape[1]
                else:
                    raise DimensionMismatch("empty generator needs an explicit n")
            M = M.reshape(0, n)
        if n is not None and M.shape[1] != n:
            raise DimensionMismatch(f"rows have length {M.shape[1]}, expected {n}")
        R, pivots = rref(M, p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", R.shape[1])
        object.__setattr__(self, "k", R.shape[0])
        object.__setattr__(self, "gen", R)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("LinearCode is immutable")

    @classmethod
    def zero(cls, p: int, n: int) -> "LinearCode":
        return cls(p, [], n=n)

    @classmethod
    def full(cls, p: int, n: int) -> "LinearCode":
        return cls(p, np.eye(n, dtype=np.int64), n=n)

    @property
    def size(self) -> int:
        return self.p**self.k

    def is_zero(self) -> bool:
        return self.k == 0

    def is_full(self) -> bool:
        return self.k == self.n

    def contains(self, v) -> bool:
        """Membership by reduction against the pivot structure."""
        w = np.array(v, dtype=np.int64) % self.p
        if w.shape != (self.n,):
            raise DimensionMismatch(f"vector length {w.shape}, expected {self.n}")
        for r, c in enumerate(self.pivots):
            if w[c]:
                w = (w - w[c] * self.gen[r]) % self.p
        return not w.any()

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def codewords(self, budget: int = CODEWORD_BUDGET) -> np.ndarray:
        """All p**k codewords, message vectors in lexicographic order."""
        if self.size > budget:
            raise BudgetExceeded(f"{self.size} codewords exceeds budget {budget}")
        if self.k == 0:
            return np.zeros((1, self.n), dtype=np.int8)
        msgs = all_vectors(self.p, self.k)
        return ((msgs.astype(np.int64) @ self.gen.astype(np.int64)) % self.p).astype(np.int8)

    def dual_wrt(self, gram: np.ndarray) -> "LinearCode":
        """The code {y : G @ gram @ y == 0}, for a fixed bilinear form."""
        M = (self.gen.astype(np.int64) @ np.asarray(gram, dtype=np.int64)) % self.p
        return LinearCode(self.p, nullspace(M, self.p), n=self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.p == other.p
            and self.n == other.n
            and self.k == other.k
            and bool(np.array_equal(self.gen, other.gen))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.gen.tobytes()))

    def __repr__(self) -> str:
        rows = ",".join("".join(str(int(x)) for x in row) for row in self.gen)
        return f"LinearCode(p={self.p}, n={self.n}, k={self.k}, [{rows}])"


def all_vectors(p: int, n: int) -> np.ndarray:
    """All p**n vectors of F_p^n in lexicographic order, one per row."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    if p**n > CODEWORD_BUDGET * 6:
        raise BudgetExceeded(f"p**n = {p**n} is too large to materialize")
    idx = np.arange(p**n)
    out = np.zeros((p**n, n), dtype=np.int8)
    for c in range(n - 1, -1, -1):
        out[:, c] = idx % p
        idx //= p
    return out


def random_code(p: int, n: int, rng: np.random.Generator, k: Optional[int] = None) -> LinearCode:
    """A random code: k uniform in 0..n unless given, then k random rows."""
    if k is None:
        k = int(rng.integers(0, n + 1))
    return LinearCode(p, rng.integers(0, p, size=(k, n)), n=n)


def span_union(a: LinearCode, b: LinearCode) -> LinearCode:
    """The sum a + b as row spaces."""
    if a.p != b.p or a.n != b.n:
        raise DimensionMismatch("codes live in different spaces")
    return LinearCode(a.p, np.vstack([a.gen, b.gen]), n=a.n)


def intersect_dim(a: LinearCode, b: LinearCode) -> int:
    """dim(a & b) via dim a + dim b - dim(a + b)."""
    return a.k + b.k - span_union(a, b).k
