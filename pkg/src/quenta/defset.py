"""Combinatorial calculus on subsets of Z_n.

Cyclotomic cosets, dual defining sets, intersection dimensions, BCH bounds
and LCD predicates — all pure set arithmetic, no field elements involved.
A DefiningSet carries its modulus n and the coset base q; residues are
always reduced to [0, n) on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DefiningSet:
    """A subset of Z_n with a coset base q, stored sorted for canonical equality."""

    n: int
    q: int
    elems: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus n = {self.n} must be positive")
        if any(not 0 <= e < self.n for e in self.elems):
            raise ValueError(f"elements outside [0, {self.n})")
        if tuple(sorted(set(self.elems))) != self.elems:
            raise ValueError("elements must be sorted and duplicate-free")

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, i):
        return i in set(self.elems)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elems)

    def union(self, other: DefiningSet) -> DefiningSet:
        self._check_compatible(other)
        return defset(self.n, self.q, set(self.elems) | set(other.elems))

    def intersection(self, other: DefiningSet) -> DefiningSet:
        self._check_compatible(other)
        return defset(self.n, self.q, set(self.elems) & set(other.elems))

    def complement(self) -> DefiningSet:
        return defset(self.n, self.q, set(range(self.n)) - set(self.elems))

    def is_coset_closed(self) -> bool:
        s = set(self.elems)
        return all((i * self.q) % self.n in s for i in s)

    def _check_compatible(self, other: DefiningSet):
        if self.n != other.n or self.q != other.q:
            raise ValueError(
                f"modulus/base mismatch: (n={self.n}, q={self.q}) vs (n={other.n}, q={other.q})"
            )


def defset(n: int, q: int, elems) -> DefiningSet:
    """Normalized DefiningSet: residues reduced mod n, deduplicated, sorted."""
    return DefiningSet(n, q, tuple(sorted({e % n for e in elems})))


def cyclotomic_coset(i: int, n: int, q: int) -> DefiningSet:
    """Orbit of i under multiplication by q mod n."""
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = {math.gcd(n, q)} != 1 for n = {n}, q = {q}")
    orbit = set()
    j = i % n
    while j not in orbit:
        orbit.add(j)
        j = (j * q) % n
    return defset(n, q, orbit)


def coset_closure(seeds, n: int, q: int) -> DefiningSet:
    """Union of the cyclotomic cosets of all seeds."""
    out: set[int] = set()
    for i in seeds:
        out |= cyclotomic_coset(i, n, q).as_set()
    return defset(n, q, out)


@dataclass(frozen=True)
class CosetPartition:
    """All cyclotomic cosets of Z_n under base q, keyed by minimal representative."""

    n: int
    q: int
    cosets: tuple[DefiningSet, ...]

    def leaders(self) -> tuple[int, ...]:
        return tuple(c.elems[0] for c in self.cosets)

    def coset_of(self, i: int) -> DefiningSet:
        i %= self.n
        for c in self.cosets:
            if i in c.as_set():
                return c
        raise KeyError(i)


def coset_partition(n: int, q: int) -> CosetPartition:
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = {math.gcd(n, q)} != 1 for n = {n}, q = {q}")
    seen: set[int] = set()
    cosets = []
    for i in range(n):
        if i in seen:
            continue
        c = cyclotomic_coset(i, n, q)
        seen |= c.as_set()
        cosets.append(c)
    return CosetPartition(n, q, tuple(cosets))


def euclidean_dual_defset(Z: DefiningSet) -> DefiningSet:
    """Z(C^dual) = Z_n minus the negation of Z mod n."""
    neg = {(-i) % Z.n for i in Z.elems}
    return defset(Z.n, Z.q, set(range(Z.n)) - neg)


def hermitian_dual_defset(Z: DefiningSet) -> DefiningSet:
    """Z_n minus (-q0 * Z mod n), where the code field is GF(q0^2) and Z.q = q0^2."""
    q0 = math.isqrt(Z.q)
    if q0 * q0 != Z.q:
        raise ValueError(f"coset base {Z.q} is not a square; Hermitian duality needs GF(q^2)")
    scaled_neg = {(-q0 * i) % Z.n for i in Z.elems}
    return defset(Z.n, Z.q, set(range(Z.n)) - scaled_neg)


def intersection_dim(Z1: DefiningSet, Z2: DefiningSet) -> int:
    """dim(C1 ∩ C2) = n - |Z1 ∪ Z2|."""
    Z1._check_compatible(Z2)
    return Z1.n - len(Z1.as_set() | Z2.as_set())


def bch_bound(Z: DefiningSet) -> int:
    """1 + length of the longest run of cyclically consecutive elements."""
    if not Z.elems:
        return 1
    n = Z.n
    present = [False] * n
    for i in Z.elems:
        present[i] = True
    if all(present):
        return n + 1
    best = 0
    for start in range(n):
        if present[start] and not present[(start - 1) % n]:
            length = 0
            j = start
            while present[j]:
                length += 1
                j = (j + 1) % n
            best = max(best, length)
    return 1 + best


def is_lcd_euclidean(Z: DefiningSet) -> bool:
    """True iff dim(C ∩ C^dual) = n - |Z ∪ Z(C^dual)| is zero."""
    return intersection_dim(Z, euclidean_dual_defset(Z)) == 0


def is_lcd_hermitian(Z: DefiningSet) -> bool:
    """True iff the Hermitian hull n - |Z ∪ Z(C^perp_h)| is zero."""
    return intersection_dim(Z, hermitian_dual_defset(Z)) == 0


def rs_defset(n: int, k: int, b: int) -> DefiningSet:
    """{b, ..., b+n-k-1} mod n: consecutive roots of a dimension-k code of length n = q-1."""
    if not 1 <= k <= n:
        raise ValueError(f"dimension k = {k} outside [1, {n}]")
    if b < 0:
        raise ValueError(f"offset b = {b} must be nonnegative")
    return defset(n, n + 1, range(b, b + n - k))


def rs_dual_defset(n: int, k: int, b: int) -> DefiningSet:
    """{n-b+1, ..., n-b+k} mod n: the dual's consecutive-root window."""
    if not 1 <= k <= n:
        raise ValueError(f"dimension k = {k} outside [1, {n}]")
    if b < 0:
        raise ValueError(f"offset b = {b} must be nonnegative")
    return defset(n, n + 1, range(n - b + 1, n - b + k + 1))
