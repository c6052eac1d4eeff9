"""Linear codes over the order-six rings, as binary/ternary component pairs.

Every linear code C over H_z decomposes uniquely as a*C_a + b*C_b with C_a
a binary and C_b a ternary linear code of the same even length, so a code
is stored as that pair and its word set {a*u + b*v} is derived on demand.
The symplectic form on H_z^n restricts through the decomposition: over H23
only the binary halves survive (scaled by a), over H32 only the ternary
halves (scaled by b).  The dual, self-orthogonality, self-duality,
quasi-self-duality, niceness, and LCD-ness all reduce to conditions on the
components; brute-force word-level twins of each are kept alongside as
oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import permutations as _lex_perms
from typing import Optional

import numpy as np

from . import ring as rg
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    LengthMismatch,
    OddLength,
    RingMismatch,
)
from .gf import LinearCode, all_vectors
from .perms import Permutation
from .ring import RingElement, RingId
from .symplectic import SymplecticSpace

WORD_BUDGET = 6**8


@dataclass(frozen=True)
class HzWord:
    """A word of H_z^n, held as the byte strings of its two component rows."""

    ring: RingId
    xs: bytes
    ys: bytes

    @classmethod
    def from_parts(cls, ring: RingId, u, v) -> "HzWord":
        ux = np.asarray(u, dtype=np.int64) % 2
        vy = np.asarray(v, dtype=np.int64) % 3
        if ux.shape != vy.shape:
            raise LengthMismatch(f"component lengths {ux.shape} vs {vy.shape}")
        return cls(ring, ux.astype(np.int8).tobytes(), vy.astype(np.int8).tobytes())

    @classmethod
    def from_symbols(cls, ring: RingId, symbols: str) -> "HzWord":
        els = [rg.from_symbol(s) for s in symbols]
        return cls(ring, bytes(e.x for e in els), bytes(e.y for e in els))

    @property
    def n(self) -> int:
        return len(self.xs)

    def parts(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.frombuffer(self.xs, dtype=np.int8).astype(np.int64),
            np.frombuffer(self.ys, dtype=np.int8).astype(np.int64),
        )

    def elements(self) -> tuple[RingElement, ...]:
        return tuple(rg.compose(x, y) for x, y in zip(self.xs, self.ys))

    def is_zero(self) -> bool:
        return not any(self.xs) and not any(self.ys)

    def __str__(self) -> str:
        return "".join(e.symbol for e in self.elements())

    def __repr__(self) -> str:
        return f"HzWord({self.ring}, {self})"


@dataclass(frozen=True)
class HzCode:
    """A linear code over H23 or H32 as its (binary, ternary) component pair."""

    ring: RingId
    ca: LinearCode
    cb: LinearCode

    def __post_init__(self):
        if self.ca.p != 2 or self.cb.p != 3:
            raise DimensionMismatch("components must be (F2 code, F3 code)")
        if self.ca.n != self.cb.n:
            raise LengthMismatch(f"component lengths differ: {self.ca.n} vs {self.cb.n}")
        if self.ca.n == 0:
            raise LengthMismatch("length must be positive")
        if self.ca.n % 2:
            raise OddLength(f"length must be even, got {self.ca.n}")

    @property
    def n(self) -> int:
        return self.ca.n

    @property
    def m(self) -> int:
        return self.ca.n // 2

    @property
    def size(self) -> int:
        return 2**self.ca.k * 3**self.cb.k

    def __repr__(self) -> str:
        return f"HzCode({self.ring}, ca={self.ca!r}, cb={self.cb!r})"


def build(ring: RingId, ca: LinearCode, cb: LinearCode) -> HzCode:
    return HzCode(ring, ca, cb)


def enumerate_words(code: HzCode, budget: int = WORD_BUDGET) -> list[HzWord]:
    """All 2^ka * 3^kb words a*u + b*v, u outer and v inner, message-lex."""
    if code.size > budget:
        raise BudgetExceeded(f"{code.size} words exceeds budget {budget}")
    ring = code.ring
    ua = code.ca.codewords()
    vb = code.cb.codewords()
    return [
        HzWord(ring, u.astype(np.int8).tobytes(), v.astype(np.int8).tobytes())
        for u in ua
        for v in vb
    ]


def word_set(code: HzCode, budget: int = WORD_BUDGET) -> frozenset[HzWord]:
    return frozenset(enumerate_words(code, budget))


def _spaces(n: int) -> tuple[SymplecticSpace, SymplecticSpace]:
    return SymplecticSpace.for_length(2, n), SymplecticSpace.for_length(3, n)


def symplectic_inner(w1: HzWord, w2: HzWord) -> RingElement:
    """<w1, w2> in the ring: a * <x1, x2>_F2 over H23, b * <y1, y2>_F3 over H32."""
    if w1.ring is not w2.ring:
        raise RingMismatch(f"{w1.ring} vs {w2.ring}")
    if w1.n != w2.n:
        raise LengthMismatch(f"word lengths differ: {w1.n} vs {w2.n}")
    sp2, sp3 = _spaces(w1.n)
    x1, y1 = w1.parts()
    x2, y2 = w2.parts()
    if w1.ring is RingId.H23:
        return rg.compose(sp2.inner(x1, x2), 0)
    return rg.compose(0, sp3.inner(y1, y2))


def euclidean_inner(w1: HzWord, w2: HzWord) -> RingElement:
    """Coordinatewise ring products, summed in the ring."""
    if w1.ring is not w2.ring:
        raise RingMismatch(f"{w1.ring} vs {w2.ring}")
    if w1.n != w2.n:
        raise LengthMismatch(f"word lengths differ: {w1.n} vs {w2.n}")
    prods = [
        rg.mul(w1.ring, e1, e2) for e1, e2 in zip(w1.elements(), w2.elements())
    ]
    return reduce(rg.add, prods, rg.ZERO)


def dual(code: HzCode) -> HzCode:
    """The symplectic dual: dualize the governing component, free the other.

    Over H23 the dual is (C_a^perp, F3^n); over H32 it is (F2^n, C_b^perp).
    Applying dual twice is the identity exactly when the free component is
    already the full space.
    """
    sp2, sp3 = _spaces(code.n)
    if code.ring is RingId.H23:
        return HzCode(code.ring, sp2.dual(code.ca), LinearCode.full(3, code.n))
    return HzCode(code.ring, LinearCode.full(2, code.n), sp3.dual(code.cb))


def dual_bruteforce(code: HzCode, budget: int = WORD_BUDGET) -> set[HzWord]:
    """Oracle dual: every word of H_z^n orthogonal to every codeword.

    Evaluates the definition directly.  The inner product only sees one
    component pair, so candidates factor: a component row passes when it
    pairs to zero with every codeword row of the same side, and the other
    side is unconstrained.
    """
    n = code.n
    if 6**n > budget:
        raise BudgetExceeded(f"6^{n} candidate words exceeds budget {budget}")
    sp2, sp3 = _spaces(n)
    ring = code.ring
    if ring is RingId.H23:
        cw = code.ca.codewords().astype(np.int64)
        cand = all_vectors(2, n).astype(np.int64)
        prod = (cand @ sp2.gram @ cw.T) % 2
        good = cand[~prod.any(axis=1)]
        free = all_vectors(3, n)
        return {
            HzWord(ring, u.astype(np.int8).tobytes(), v.tobytes())
            for u in good
            for v in free
        }
    cw = code.cb.codewords().astype(np.int64)
    cand = all_vectors(3, n).astype(np.int64)
    prod = (cand @ sp3.gram @ cw.T) % 3
    good = cand[~prod.any(axis=1)]
    free = all_vectors(2, n)
    return {
        HzWord(ring, u.tobytes(), v.astype(np.int8).tobytes())
        for v in good
        for u in free
    }


# ---------------------------------------------------------------------------
# predicates, via the component characterizations


def governing(code: HzCode) -> LinearCode:
    """The component the ring's idempotent side selects."""
    return code.ca if code.ring is RingId.H23 else code.cb


def is_self_orthogonal(code: HzCode) -> bool:
    sp2, sp3 = _spaces(code.n)
    if code.ring is RingId.H23:
        return sp2.is_self_orthogonal(code.ca)
    return sp3.is_self_orthogonal(code.cb)


def is_self_dual(code: HzCode) -> bool:
    sp2, sp3 = _spaces(code.n)
    if code.ring is RingId.H23:
        return sp2.is_self_dual(code.ca) and code.cb.is_full()
    return code.ca.is_full() and sp3.is_self_dual(code.cb)


def is_qsd(code: HzCode) -> bool:
    """Quasi-self-dual: self-orthogonal of the middle size 6^m."""
    sp2, sp3 = _spaces(code.n)
    if code.ring is RingId.H23:
        return sp2.is_self_dual(code.ca) and code.cb.k == code.m
    return code.ca.k == code.m and sp3.is_self_dual(code.cb)


def is_nice(code: HzCode) -> bool:
    """|C| * |dual C| = 36^m; holds exactly when the free component is zero."""
    if code.ring is RingId.H23:
        return code.cb.is_zero()
    return code.ca.is_zero()


def is_lcd(code: HzCode) -> bool:
    sp2, sp3 = _spaces(code.n)
    if code.ring is RingId.H23:
        return sp2.is_lcd(code.ca) and code.cb.is_zero()
    return code.ca.is_zero() and sp3.is_lcd(code.cb)


def flags(code: HzCode) -> dict[str, bool]:
    return {
        "so": is_self_orthogonal(code),
        "sd": is_self_dual(code),
        "qsd": is_qsd(code),
        "nice": is_nice(code),
        "lcd": is_lcd(code),
    }


# ---------------------------------------------------------------------------
# the same predicates straight from the definitions, by word enumeration


def is_self_orthogonal_bruteforce(code: HzCode) -> bool:
    words = enumerate_words(code)
    duals = dual_bruteforce(code)
    return all(w in duals for w in words)


def is_self_dual_bruteforce(code: HzCode) -> bool:
    return set(enumerate_words(code)) == dual_bruteforce(code)


def is_qsd_bruteforce(code: HzCode) -> bool:
    return is_self_orthogonal_bruteforce(code) and code.size == 6**code.m


def is_nice_bruteforce(code: HzCode) -> bool:
    return code.size * len(dual_bruteforce(code)) == 36**code.m


def is_lcd_bruteforce(code: HzCode) -> bool:
    both = set(enumerate_words(code)) & dual_bruteforce(code)
    return len(both) == 1 and next(iter(both)).is_zero()


def is_euclidean_self_orthogonal(code: HzCode, budget: int = 6**6) -> bool:
    """Word-by-word check that all Euclidean inner products vanish.

    Quadratic in the word count, so budgeted tighter; this exists to expose
    codes that are symplectically but not Euclideanly self-orthogonal.
    """
    words = enumerate_words(code)
    if len(words) ** 2 > budget:
        raise BudgetExceeded(f"{len(words)}^2 word pairs exceeds budget {budget}")
    return all(
        euclidean_inner(w1, w2) is rg.ZERO for w1 in words for w2 in words
    )


# ---------------------------------------------------------------------------
# permutation equivalence


def equivalent(c1: HzCode, c2: HzCode, max_n: int = 8) -> Optional[Permutation]:
    """A permutation carrying c1 onto c2 componentwise, or None.

    Exhaustive lexicographic scan of S_n with early exits: component
    dimensions must agree, and the binary side is matched before the
    ternary side is tried.
    """
    if c1.ring is not c2.ring:
        raise RingMismatch(f"{c1.ring} vs {c2.ring}")
    if c1.n != c2.n:
        raise LengthMismatch(f"lengths differ: {c1.n} vs {c2.n}")
    n = c1.n
    if n > max_n:
        raise BudgetExceeded(f"n={n} beyond equivalence scan guard {max_n}")
    if c1.ca.k != c2.ca.k or c1.cb.k != c2.cb.k:
        return None
    ga = c1.ca.gen.astype(np.int64)
    gb = c1.cb.gen.astype(np.int64)
    for images in _lex_perms(range(n)):
        inv = [0] * n
        for i, j in enumerate(images):
            inv[j] = i
        if not all(row in c2.ca for row in ga[:, inv]):
            continue
        if all(row in c2.cb for row in gb[:, inv]):
            return Permutation(images)
    return None
