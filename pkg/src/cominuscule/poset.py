"""The labeled root poset of a cominuscule space and its lower order ideals.

A space is named ``<Family><rank>/P<node>``.  Its poset consists of the
positive roots whose coefficient at the cominuscule node is 1, ordered by
``a <= b`` iff ``b - a`` has non-negative coefficients.  Elements are kept
in a canonical linear extension: by height, then lexicographically.
"""
from __future__ import annotations

import re
from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InternalInconsistency, NotCominuscule, ParseError
from .roots import (
    DynkinType,
    Length,
    Root,
    RootSystem,
    build_root_system,
    length_class,
    reflect,
)

MAX_ELEMENTS = 27  # E7/P7; masks fit in 32 bits

_SPACE_RE = re.compile(r"^\s*([ABCDE])(\d+)\s*/\s*P(\d+)\s*$")


def apply_word(letters: Sequence[int], a: Root, rs: RootSystem) -> Root:
    """Apply s_{letters[-1]} ... s_{letters[0]} to a (first letter acts first)."""
    for i in letters:
        a = reflect(a, i, rs)
    return a


def _is_simple(a: Root) -> bool:
    return all(x in (0, 1) for x in a) and sum(a) == 1


class CominPoset:
    def __init__(self, rs: RootSystem, gamma: int):
        if gamma not in range(1, rs.rank + 1) or rs.highest_root[gamma - 1] != 1:
            valid = ", ".join(str(i) for i in sorted(rs.cominuscule_nodes))
            raise NotCominuscule(
                f"node {gamma} is not cominuscule in {rs}; valid nodes: {valid}"
            )
        self.rs = rs
        self.gamma = gamma
        self.name = f"{rs.dynkin_type}/P{gamma}"
        self.elements: tuple[Root, ...] = tuple(
            r for r in rs.positive_roots if r[gamma - 1] == 1
        )
        n = len(self.elements)
        if n > MAX_ELEMENTS:
            raise InternalInconsistency(f"{self.name} has {n} elements > {MAX_ELEMENTS}")
        self.index = {r: i for i, r in enumerate(self.elements)}
        self.labels: tuple[Length, ...] = tuple(length_class(r, rs) for r in self.elements)

        covers = []
        for j, b in enumerate(self.elements):
            for k in range(rs.rank):
                if b[k] > 0:
                    a = list(b)
                    a[k] -= 1
                    i = self.index.get(tuple(a))
                    if i is not None:
                        covers.append((i, j))
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(covers))
        self.lower_covers = [[] for _ in range(n)]
        self.upper_covers = [[] for _ in range(n)]
        for i, j in self.covers:
            if i >= j:
                raise InternalInconsistency(f"cover {i}<{j} breaks the linear extension")
            self.lower_covers[j].append(i)
            self.upper_covers[i].append(j)
        # down[e]: mask of elements <= e; computed along the linear extension
        self.down = [0] * n
        for j in range(n):
            m = 1 << j
            for i in self.lower_covers[j]:
                m |= self.down[i]
            self.down[j] = m
        self.up = [0] * n
        for i in reversed(range(n)):
            m = 1 << i
            for j in self.upper_covers[i]:
                m |= self.up[j]
            self.up[i] = m
        self.full_mask = (1 << n) - 1

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"CominPoset({self.name})"

    @property
    def rank(self) -> int:
        return self.rs.rank

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def is_ideal_mask(self, mask: int) -> bool:
        if mask & ~self.full_mask or mask < 0:
            return False
        for e in iter_bits(mask):
            if self.down[e] & ~mask:
                return False
        return True

    def ideal(self, indices: Iterable[int] = ()) -> "Ideal":
        mask = 0
        for i in indices:
            if not 0 <= i < len(self):
                raise ParseError(f"index {i} out of range for {self.name} (0..{len(self) - 1})")
            mask |= 1 << i
        return Ideal(self, mask)

    def full(self) -> "Ideal":
        return Ideal(self, self.full_mask)

    def empty(self) -> "Ideal":
        return Ideal(self, 0)


def iter_bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Ideal:
    """Lower order ideal of a CominPoset, stored as a bitmask."""

    __slots__ = ("poset", "mask")

    def __init__(self, poset: CominPoset, mask: int):
        if not poset.is_ideal_mask(mask):
            raise ParseError(f"mask {mask:#x} is not a lower order ideal of {poset.name}")
        self.poset = poset
        self.mask = mask

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.mask == other.mask
            and self.poset.name == other.poset.name
        )

    def __hash__(self):
        return hash((self.poset.name, self.mask))

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, e: int) -> bool:
        return bool(self.mask >> e & 1)

    def __le__(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return f"Ideal({self.poset.name}, {format_ideal(self)})"

    @property
    def indices(self) -> list[int]:
        return list(iter_bits(self.mask))

    @property
    def roots(self) -> list[Root]:
        return [self.poset.elements[i] for i in iter_bits(self.mask)]

    def maximal(self) -> list[int]:
        """Elements whose removal leaves an ideal."""
        p = self.poset
        return [e for e in iter_bits(self.mask) if p.up[e] & self.mask == 1 << e]

    def remove(self, e: int) -> "Ideal":
        return Ideal(self.poset, self.mask & ~(1 << e))


@lru_cache(maxsize=None)
def build_comin_poset(rs: RootSystem, gamma: int) -> CominPoset:
    return CominPoset(rs, gamma)


def parse_space(text: str) -> tuple[DynkinType, int]:
    m = _SPACE_RE.match(text)
    if not m:
        raise ParseError(f"bad space id {text!r}; expected e.g. A5/P2, D5/P5, E7/P7")
    family, rank, node = m.group(1), int(m.group(2)), int(m.group(3))
    try:
        t = DynkinType(family, rank)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    rs = build_root_system(t)
    if node not in rs.cominuscule_nodes:
        valid = ", ".join(f"P{i}" for i in sorted(rs.cominuscule_nodes))
        raise ParseError(f"P{node} is not cominuscule in {t}; valid nodes: {valid}")
    return t, node


def space(text: str) -> CominPoset:
    """Build (cached) the poset of a space given by its id, e.g. ``"E6/P6"``."""
    t, node = parse_space(text)
    return build_comin_poset(build_root_system(t), node)


def parse_ideal(p: CominPoset, text: str) -> Ideal:
    s = text.strip()
    if s == "full":
        return p.full()
    if s == "empty":
        return p.empty()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"bad ideal literal {text!r}; use full, empty or [i1,i2,...]")
    body = s[1:-1].strip()
    try:
        idx = [int(x) for x in body.split(",")] if body else []
    except ValueError as exc:
        raise ParseError(f"bad ideal literal {text!r}") from exc
    return p.ideal(idx)


def format_ideal(lam: Ideal) -> str:
    if lam.mask == lam.poset.full_mask and lam.mask:
        return "full"
    if lam.mask == 0:
        return "empty"
    return "[" + ",".join(str(i) for i in lam.indices) + "]"


def enumerate_ideals(p: CominPoset) -> list[Ideal]:
    """All lower order ideals, ordered by (size, mask).

    Walks the ideal lattice upward one addable element at a time.
    """
    seen = {0}
    level = [0]
    out = [0]
    while level:
        nxt = set()
        for mask in level:
            for e in range(len(p)):
                bit = 1 << e
                if not mask & bit and p.down[e] & ~bit & ~mask == 0:
                    m = mask | bit
                    if m not in seen:
                        seen.add(m)
                        nxt.add(m)
        level = sorted(nxt)
        out.extend(level)
    return [Ideal(p, m) for m in out]


def principal_ideal(p: CominPoset, e: int) -> Ideal:
    return Ideal(p, p.down[e])


def delta_map(p: CominPoset, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """delta for every element.

    For each box e, w is the Weyl element of its principal ideal with e
    removed, built as a word from already known delta values read along
    ``order`` (any linear extension; the canonical one by default).  Then
    w.e is a simple root and that node is delta(e).
    """
    n = len(p)
    order = list(range(n)) if order is None else list(order)
    pos = {e: k for k, e in enumerate(order)}
    for i, j in p.covers:
        if pos[i] > pos[j]:
            raise ValueError("order is not a linear extension")
    delta: dict[int, int] = {}
    for e in order:
        below = sorted(iter_bits(p.down[e] & ~(1 << e)), key=pos.__getitem__)
        v = apply_word([delta[b] for b in below], p.elements[e], p.rs)
        if not _is_simple(v):
            raise InternalInconsistency(
                f"{p.name}: w.beta = {v} is not a simple root for element {e}"
            )
        delta[e] = v.index(1) + 1
    return tuple(delta[e] for e in range(n))


@lru_cache(maxsize=None)
def _delta_cached(p: CominPoset) -> tuple[int, ...]:
    return delta_map(p)


def delta(p: CominPoset, e: int) -> int:
    return _delta_cached(p)[e]


@lru_cache(maxsize=None)
def _core_mask(p: CominPoset) -> int:
    # chains from gamma; each new top covers exactly the old top and is no longer than it
    rank = {Length.LONG: 1, Length.SHORT: 0}
    core = 0
    stack = [(0, 1)]
    while stack:
        top, mask = stack.pop()
        core |= mask
        for x in p.upper_covers[top]:
            if p.lower_covers[x] == [top] and rank[p.labels[x]] <= rank[p.labels[top]]:
                stack.append((x, mask | 1 << x))
    return core


def dynkin_core(p: CominPoset) -> Ideal:
    """Union of all Dynkin chains."""
    return Ideal(p, _core_mask(p))


def support(p: CominPoset, lam: Ideal) -> frozenset[int]:
    d = _delta_cached(p)
    return frozenset(d[e] for e in iter_bits(lam.mask & _core_mask(p)))


def brute_force_ideals(p: CominPoset) -> list[int]:
    """Filter all 2^n subsets; only for small posets."""
    if len(p) > 20:
        raise ValueError("too many elements for brute force")
    return [m for m in range(1 << len(p)) if p.is_ideal_mask(m)]


def count_ideals(p: CominPoset) -> int:
    """Count ideals by the split N(P) = N(P - up(x)) + N(P - down(x))."""

    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if not mask:
            return 1
        x = (mask & -mask).bit_length() - 1
        return count(mask & ~p.up[x]) + count(mask & ~p.down[x])

    return count(p.full_mask)
