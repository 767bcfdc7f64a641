"""Finite posets with long/short labels, and labeled-poset isomorphism."""
from __future__ import annotations

import itertools
from collections import Counter
from typing import TYPE_CHECKING, Optional, Sequence

from .roots import Length

if TYPE_CHECKING:
    from .poset import CominPoset, Ideal


class LabeledPoset:
    """A partial order on ``range(n)`` with a label per element.

    ``leq[i][j]`` is True iff i <= j.  Covers, ranks and the per-element
    signatures used to prune isomorphism search are derived once.
    """

    def __init__(self, leq: Sequence[Sequence[bool]], label: Sequence[Length], check: bool = True):
        n = len(leq)
        if len(label) != n:
            raise ValueError("label length does not match relation size")
        self.n = n
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)
        self.label = tuple(label)
        self.down = [sum(1 << i for i in range(n) if self.leq[i][j]) for j in range(n)]
        self.up = [sum(1 << j for j in range(n) if self.leq[i][j]) for i in range(n)]
        if check:
            self._check_order()
        # i is covered by j iff i < j with nothing strictly between
        self.lower_covers = [[] for _ in range(n)]
        self.upper_covers = [[] for _ in range(n)]
        for j in range(n):
            strict = self.down[j] & ~(1 << j)
            for i in range(n):
                if strict >> i & 1 and self.up[i] & strict == 1 << i:
                    self.lower_covers[j].append(i)
                    self.upper_covers[i].append(j)
        self.rank = [0] * n
        for j in sorted(range(n), key=lambda k: bin(self.down[k]).count("1")):
            if self.lower_covers[j]:
                self.rank[j] = 1 + max(self.rank[i] for i in self.lower_covers[j])
        self.signature = [
            (
                self.label[i] is Length.LONG,
                self.rank[i],
                len(self.lower_covers[i]),
                len(self.upper_covers[i]),
                bin(self.down[i]).count("1"),
                bin(self.up[i]).count("1"),
            )
            for i in range(n)
        ]

    def _check_order(self):
        n = self.n
        for i in range(n):
            if not self.leq[i][i]:
                raise ValueError(f"relation not reflexive at {i}")
            for j in range(n):
                if i != j and self.leq[i][j] and self.leq[j][i]:
                    raise ValueError(f"relation not antisymmetric at {i},{j}")
        for j in range(n):
            for i in range(n):
                if self.leq[i][j] and self.down[i] & ~self.down[j]:
                    raise ValueError("relation not transitive")

    @classmethod
    def from_covers(cls, n: int, covers, label) -> "LabeledPoset":
        """Build from (lower, upper) cover pairs; the order is their transitive closure."""
        above = [set() for _ in range(n)]
        for i, j in covers:
            above[i].add(j)
        down = [1 << j for j in range(n)]
        # fixed point of down[j] |= down[i] for i below j; fine at these sizes
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in above[i]:
                    m = down[j] | down[i]
                    if m != down[j]:
                        down[j] = m
                        changed = True
        leq = [[bool(down[j] >> i & 1) for j in range(n)] for i in range(n)]
        return cls(leq, label)

    def __len__(self):
        return self.n

    def __repr__(self):
        labs = "".join("L" if x is Length.LONG else "S" for x in self.label)
        return f"LabeledPoset(n={self.n}, labels={labs}, covers={self.cover_pairs()})"

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(self.n) for i in self.lower_covers[j]]

    def is_chain(self) -> bool:
        return all(len(c) <= 1 for c in self.lower_covers) and all(
            len(c) <= 1 for c in self.upper_covers
        ) and sum(1 for c in self.lower_covers if not c) <= 1

    def prekey(self) -> tuple:
        """Cheap isomorphism invariant: size, label counts, (rank, label) profile."""
        return (
            self.n,
            sum(1 for x in self.label if x is Length.SHORT),
            tuple(sorted(Counter(zip(self.rank, (x.value for x in self.label))).items())),
        )

    def unlabeled(self) -> "LabeledPoset":
        return LabeledPoset(self.leq, [Length.LONG] * self.n, check=False)


def abstract_poset(p: "CominPoset", lam: "Ideal") -> LabeledPoset:
    """Induced labeled subposet on lam, renumbered 0.. in canonical order."""
    idx = lam.indices
    leq = [[p.leq(a, b) for b in idx] for a in idx]
    return LabeledPoset(leq, [p.labels[a] for a in idx], check=False)


def verify_isomorphism(a: LabeledPoset, b: LabeledPoset, f: Sequence[int]) -> bool:
    if a.n != b.n or len(f) != a.n or sorted(f) != list(range(b.n)):
        return False
    for x in range(a.n):
        if a.label[x] != b.label[f[x]]:
            return False
        for y in range(a.n):
            if a.leq[x][y] != b.leq[f[x]][f[y]]:
                return False
    return True


def _chain_order(p: LabeledPoset) -> list[int]:
    return sorted(range(p.n), key=lambda i: p.rank[i])


def find_isomorphism(a: LabeledPoset, b: LabeledPoset) -> Optional[tuple[int, ...]]:
    """A label-preserving order isomorphism a -> b as a tuple f[x], or None.

    Backtracking over a's elements in (rank, index) order; candidates in b
    must share the element signature and agree on the order relation with
    every element already placed.  Returns the first witness found.
    """
    if a.prekey() != b.prekey():
        return None
    if sorted(a.signature) != sorted(b.signature):
        return None
    n = a.n
    if n == 0:
        return ()
    if a.is_chain() and b.is_chain():
        ca, cb = _chain_order(a), _chain_order(b)
        if [a.label[i] for i in ca] != [b.label[i] for i in cb]:
            return None
        f = [0] * n
        for x, y in zip(ca, cb):
            f[x] = y
        return tuple(f)

    order = sorted(range(n), key=lambda i: (a.rank[i], i))
    by_sig: dict[tuple, list[int]] = {}
    for y in range(n):
        by_sig.setdefault(b.signature[y], []).append(y)
    cands = [by_sig.get(a.signature[x], []) for x in order]

    f = [-1] * n
    used = 0

    def consistent(x: int, y: int, placed: int) -> bool:
        # placed elements comparable to x must map onto those comparable to y
        ad, au = a.down[x], a.up[x]
        bd, bu = b.down[y], b.up[y]
        for k in range(placed):
            px = order[k]
            py = f[px]
            if bool(ad >> px & 1) != bool(bd >> py & 1):
                return False
            if bool(au >> px & 1) != bool(bu >> py & 1):
                return False
        return True

    def search(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        x = order[k]
        for y in cands[k]:
            if used >> y & 1:
                continue
            if not consistent(x, y, k):
                continue
            f[x] = y
            used |= 1 << y
            if search(k + 1):
                return True
            used &= ~(1 << y)
            f[x] = -1
        return False

    if search(0):
        return tuple(f)
    return None


def is_isomorphic(a: LabeledPoset, b: LabeledPoset) -> bool:
    return find_isomorphism(a, b) is not None


def brute_force_isomorphism(a: LabeledPoset, b: LabeledPoset) -> Optional[tuple[int, ...]]:
    """Try every permutation. Factorial time; for small oracle checks only."""
    if a.n != b.n:
        return None
    for perm in itertools.permutations(range(b.n)):
        if verify_isomorphism(a, b, perm):
            return perm
    return None
