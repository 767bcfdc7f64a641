"""Finite root systems of types A-E.

Roots are integer coefficient tuples over the simple roots, nodes are
numbered 1..rank in the Bourbaki convention.  Nothing here uses floating
point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Tuple

from .errors import InvalidRank, NotARoot

Root = Tuple[int, ...]

# smallest admissible rank per family, and an optional upper bound
RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (3, None), "D": (4, None), "E": (6, 7)}


class Length(enum.Enum):
    LONG = "long"
    SHORT = "short"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in RANK_BOUNDS:
            raise InvalidRank(f"unknown family {self.family!r}; expected one of A, B, C, D, E")
        lo, hi = RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f"{lo}..{hi}" if hi else f">= {lo}"
            raise InvalidRank(f"type {self.family} needs rank {bound}, got {self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def _bonds(t: DynkinType):
    """Yield (i, j, A_ij, A_ji) for each edge, 1-based nodes."""
    n = t.rank
    if t.family in "ABC":
        for i in range(1, n - 1):
            yield i, i + 1, -1, -1
        if n >= 2:
            if t.family == "A":
                yield n - 1, n, -1, -1
            elif t.family == "B":
                # alpha_n short
                yield n - 1, n, -1, -2
            else:
                # alpha_n long
                yield n - 1, n, -2, -1
    elif t.family == "D":
        for i in range(1, n - 1):
            yield i, i + 1, -1, -1
        yield n - 2, n, -1, -1
    else:
        yield 1, 3, -1, -1
        yield 2, 4, -1, -1
        for i in range(3, n):
            yield i, i + 1, -1, -1


def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """A[i][j] = <alpha_j, alpha_i> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), 0-based."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _bonds(t):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan) -> tuple[int, ...]:
    # propagate d_j = d_i A_ij / A_ji along the (connected) diagram
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    denom = reduce(lambda x, y: x * y // gcd(x, y), (x.denominator for x in d))
    ints = [int(x * denom) for x in d]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RootSystem:
    dynkin_type: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    cominuscule_nodes: frozenset[int]
    _root_set: frozenset = field(repr=False, compare=False, default=frozenset())
    _max_sq: int = field(repr=False, compare=False, default=0)

    @property
    def rank(self) -> int:
        return self.dynkin_type.rank

    def simple_root(self, i: int) -> Root:
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def is_root(self, a: Root) -> bool:
        return tuple(a) in self._root_set or tuple(-x for x in a) in self._root_set

    def is_positive_root(self, a: Root) -> bool:
        return tuple(a) in self._root_set

    def edges(self):
        """Dynkin diagram edges as (i, j, weight) with i < j, 1-based."""
        out = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.cartan[i][j]:
                    out.append((i + 1, j + 1, self.cartan[i][j] * self.cartan[j][i]))
        return out

    def neighbours(self, i: int) -> list[int]:
        return [j + 1 for j in range(self.rank) if j != i - 1 and self.cartan[i - 1][j]]

    def __str__(self):
        return str(self.dynkin_type)


def inner_product(a: Root, b: Root, rs: RootSystem) -> int:
    """(a, b) = sum_ij a_i b_j d_i A_ij."""
    d, cartan = rs.symmetrizer, rs.cartan
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = cartan[i]
            total += ai * d[i] * sum(bj * row[j] for j, bj in enumerate(b) if bj)
    return total


def pairing(a: Root, i: int, rs: RootSystem) -> int:
    """<a, alpha_i> = 2 (a, alpha_i) / (alpha_i, alpha_i)."""
    row = rs.cartan[i - 1]
    return sum(aj * row[j] for j, aj in enumerate(a))


def reflect(a: Root, i: int, rs: RootSystem) -> Root:
    """Simple reflection s_i applied to a."""
    c = pairing(a, i, rs)
    if not c:
        return tuple(a)
    out = list(a)
    out[i - 1] -= c
    return tuple(out)


def length_class(a: Root, rs: RootSystem) -> Length:
    if not rs.is_root(a):
        raise NotARoot(f"{tuple(a)} is not a root of {rs}")
    return Length.LONG if inner_product(a, a, rs) == rs._max_sq else Length.SHORT


def _positive_roots(cartan) -> list[Root]:
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                # alpha_i-string through beta: beta - p alpha_i .. beta + q alpha_i, p - q = <beta, alpha_i>
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) not in known:
                        break
                    p += 1
                q = p - sum(beta[j] * cartan[i][j] for j in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        known |= nxt
        layer = sorted(nxt)
    return sorted(known, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(t: DynkinType) -> RootSystem:
    cartan = cartan_matrix(t)
    d = _symmetrizer(cartan)
    roots = _positive_roots(cartan)
    highest = roots[-1]
    comin = frozenset(i + 1 for i, c in enumerate(highest) if c == 1)
    rs = RootSystem(t, cartan, d, tuple(roots), highest, comin, frozenset(roots))
    max_sq = max(inner_product(r, r, rs) for r in roots)
    object.__setattr__(rs, "_max_sq", max_sq)
    return rs


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(DynkinType(family, rank))


def format_root(a: Root) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"
