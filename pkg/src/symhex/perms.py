"""Coordinate permutations, automorphism groups, and double cosets.

A permutation pi moves coordinate i to position pi(i), so it acts on a
vector by (pi . v)[pi(i)] = v[i] and on a code by permuting generator
columns.  Composition is (sigma * tau)(i) = sigma(tau(i)), matching
sigma . (tau . v) = (sigma * tau) . v.

Double cosets G \\ S_n / H are found by sweeping S_n in lexicographic
(Lehmer rank) order with a dense visited table: the first unvisited
permutation seeds a BFS closure under left multiplication by generators
of G and right multiplication by generators of H.  The seed is therefore
the lexicographically smallest member of its orbit, and orbit sizes sum
to n!.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations as _lex_perms
from math import factorial

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch
from .gf import LinearCode, nullspace

# n! table sizes stay sane up to 8! = 40320
MAX_PERM_N = 8


@dataclass(frozen=True, order=True)
class Permutation:
    """One-line notation over 0..n-1; ordering is lexicographic."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images)-1}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(self.n))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """self * other: apply other first, then self."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def rank(self) -> int:
        """Lehmer rank: position in the lexicographic order of S_n."""
        return rank_images(self.images)

    @classmethod
    def unrank(cls, n: int, r: int) -> "Permutation":
        return cls(unrank_images(n, r))

    def cycle_string(self) -> str:
        """Disjoint cycles on 1-based points; 'e' for the identity."""
        seen = [False] * self.n
        parts = []
        for i in range(self.n):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
        return "".join(parts) if parts else "e"

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


def rank_images(images: tuple[int, ...]) -> int:
    n = len(images)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if images[j] < images[i])
        r += smaller * factorial(n - 1 - i)
    return r


def unrank_images(n: int, r: int) -> tuple[int, ...]:
    if not 0 <= r < factorial(n):
        raise ValueError(f"rank {r} out of range for n={n}")
    pool = list(range(n))
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        q, r = divmod(r, f)
        out.append(pool.pop(q))
    return tuple(out)


def all_permutations(n: int):
    """S_n in lexicographic order (which is Lehmer rank order)."""
    for images in _lex_perms(range(n)):
        yield Permutation(images)


def apply_perm(perm: Permutation, code: LinearCode) -> LinearCode:
    """The code {pi . v : v in code}, recanonicalized."""
    if perm.n != code.n:
        raise DimensionMismatch(f"permutation on {perm.n} points, code length {code.n}")
    inv = perm.inverse().images
    return LinearCode(code.p, code.gen[:, inv], n=code.n)


def perm_equivalent(c1: LinearCode, c2: LinearCode, max_n: int = MAX_PERM_N) -> "Permutation | None":
    """A permutation carrying c1 onto c2, or None; exhaustive over S_n."""
    if c1.p != c2.p or c1.n != c2.n:
        raise DimensionMismatch("codes live in different spaces")
    n = c1.n
    if n > max_n:
        raise BudgetExceeded(f"n={n} beyond equivalence scan guard {max_n}")
    if c1.k != c2.k:
        return None
    G = c1.gen.astype(np.int64)
    for images in _lex_perms(range(n)):
        inv = [0] * n
        for i, j in enumerate(images):
            inv[j] = i
        if all(row in c2 for row in G[:, inv]):
            return Permutation(images)
    return None


def mulclose(gens: list[Permutation], seed: list[Permutation] | None = None) -> set[Permutation]:
    """Closure of seed (default the identity) under the generators."""
    if not gens and not seed:
        raise ValueError("need at least one generator or seed element")
    n = gens[0].n if gens else seed[0].n
    found = {Permutation.identity(n)} if seed is None else set(seed)
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = g * s
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return found


class PermGroup:
    """A subgroup of S_n given by its full element list plus generators.

    Generators are a greedy minimal-ish subset: sweeping elements in
    lexicographic order, keep each one not already generated.  mulclose of
    the generators reproduces the element set.
    """

    def __init__(self, n: int, elements: list[Permutation]):
        self.n = n
        self.elements = tuple(sorted(set(elements)))
        if not self.elements or not self.elements[0].is_identity():
            raise ValueError("a group must contain the identity")
        self.generators = self._greedy_generators()

    def _greedy_generators(self) -> tuple[Permutation, ...]:
        gens: list[Permutation] = []
        closure = {Permutation.identity(self.n)}
        for el in self.elements:
            if el not in closure:
                gens.append(el)
                # grow the closure incrementally from the new generator
                frontier = [el]
                closure.add(el)
                while frontier:
                    nxt = []
                    for s in frontier:
                        for g in gens:
                            for t in (g * s, s * g):
                                if t not in closure:
                                    closure.add(t)
                                    nxt.append(t)
                    frontier = nxt
        assert len(closure) == len(self.elements)
        return tuple(gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: Permutation) -> bool:
        return perm in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, [Permutation.identity(n)])

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        return cls(n, list(all_permutations(n)))

    def __repr__(self) -> str:
        return f"PermGroup(n={self.n}, order={self.order})"


def automorphism_group(code: LinearCode) -> PermGroup:
    """All coordinate permutations fixing the code setwise.

    Scans the whole of S_n; each candidate is accepted when the permuted
    generator rows still satisfy the code's parity checks.
    """
    n = code.n
    if n > MAX_PERM_N:
        raise BudgetExceeded(f"n={n} beyond automorphism scan guard {MAX_PERM_N}")
    G = code.gen.astype(np.int64)
    H = nullspace(G, code.p).astype(np.int64) if code.k < n else None
    p = code.p
    kept = []
    for images in _lex_perms(range(n)):
        if H is not None:
            inv = [0] * n
            for i, j in enumerate(images):
                inv[j] = i
            if ((G[:, inv] @ H.T) % p).any():
                continue
        kept.append(Permutation(images))
    return PermGroup(n, kept)


def double_cosets(G: PermGroup, H: PermGroup) -> list[tuple[Permutation, int]]:
    """The double cosets G sigma H, as (lex-min representative, size) pairs.

    BFS orbit closure over generator multiplication; never touches the
    |G| x |H| product.  Orbits are reported in order of their representative
    and their sizes partition n!.
    """
    n = G.n
    if H.n != n:
        raise DimensionMismatch(f"groups act on {G.n} and {H.n} points")
    if n > MAX_PERM_N:
        raise BudgetExceeded(f"n={n} beyond double coset guard {MAX_PERM_N}")
    total = factorial(n)
    visited = bytearray(total)
    lgens = [g.images for g in G.generators]
    rgens = [h.images for h in H.generators]
    out: list[tuple[Permutation, int]] = []
    for r in range(total):
        if visited[r]:
            continue
        seed = unrank_images(n, r)
        visited[r] = 1
        size = 1
        queue = deque([seed])
        while queue:
            s = queue.popleft()
            neighbors = [tuple(g[j] for j in s) for g in lgens]
            neighbors += [tuple(s[j] for j in h) for h in rgens]
            for t in neighbors:
                tr = rank_images(t)
                if not visited[tr]:
                    visited[tr] = 1
                    size += 1
                    queue.append(t)
        out.append((Permutation(seed), size))
    assert sum(sz for _, sz in out) == total
    return out


def double_coset_reps(G: PermGroup, H: PermGroup) -> list[Permutation]:
    return [rep for rep, _ in double_cosets(G, H)]
