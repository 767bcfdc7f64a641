"""Chow-group data of a Schubert variety and recovery of its labeled poset.

Model: the Chow group of X_lambda is free on the Schubert classes [X_mu],
mu ranging over ideals inside lambda; the hyperplane class Z acts by the
Chevalley rule

    Z . [X_mu] = sum over removable alpha in mu of (gamma,gamma)/(alpha,alpha) [X_{mu - alpha}]

and these are the only structural facts used.  ``reconstruct_labeled_poset``
sees nothing but the integer table c[i][j] on opaque class ids.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalInconsistency, MalformedTable, NotContained
from .labeled import LabeledPoset
from .poset import CominPoset, Ideal, enumerate_ideals
from .roots import Length, inner_product


@dataclass(frozen=True)
class FormalSum:
    """Non-negative integer combination of Schubert classes, keyed by ideal mask."""

    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "FormalSum":
        return cls(tuple(sorted((m, c) for m, c in d.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __len__(self):
        return len(self.terms)


def chevalley_coefficient(p: CominPoset, e: int) -> int:
    rs = p.rs
    gamma = rs.simple_root(p.gamma)
    alpha = p.elements[e]
    ratio = Fraction(inner_product(gamma, gamma, rs), inner_product(alpha, alpha, rs))
    if ratio.denominator != 1:
        raise InternalInconsistency(f"non-integral Chevalley coefficient {ratio}")
    return int(ratio)


def chevalley_lower(p: CominPoset, lam: Ideal, mu: Ideal) -> FormalSum:
    if not mu <= lam:
        raise NotContained(f"{mu} is not contained in {lam}")
    out = {}
    for e in mu.maximal():
        out[mu.mask & ~(1 << e)] = chevalley_coefficient(p, e)
    return FormalSum.from_dict(out)


def format_sum(p: CominPoset, s: FormalSum) -> str:
    from .poset import format_ideal

    if not s.terms:
        return "0"
    parts = []
    for mask, c in s.terms:
        name = "[X_" + format_ideal(Ideal(p, mask)) + "]"
        parts.append(name if c == 1 else f"{c}*{name}")
    return " + ".join(parts)


@dataclass(frozen=True)
class MultTable:
    """Action of Z on the Schubert basis; c[i] maps j -> coefficient of E_j in Z.E_i."""

    basis: tuple[int, ...]
    c: tuple[dict, ...]
    # ideal behind each class id; for tests, never read by reconstruction
    hidden: tuple = field(default=(), repr=False, compare=False)

    def __len__(self):
        return len(self.basis)

    def nonzero(self):
        for i, row in enumerate(self.c):
            for j, v in row.items():
                yield i, j, v


def build_mult_table(p: CominPoset, lam: Ideal, shuffle_seed: int = 0) -> MultTable:
    """Table over all ideals inside lam, class ids shuffled by the seed."""
    ideals = [mu for mu in enumerate_ideals(p) if mu <= lam]
    random.Random(shuffle_seed).shuffle(ideals)
    pos = {mu.mask: k for k, mu in enumerate(ideals)}
    rows = []
    for mu in ideals:
        s = chevalley_lower(p, lam, mu)
        rows.append({pos[m]: v for m, v in s.terms})
    return MultTable(tuple(range(len(ideals))), tuple(rows), tuple(ideals))


def _grading(t: MultTable) -> list[int]:
    n = len(t)
    bottoms = [i for i in range(n) if not t.c[i]]
    if len(bottoms) != 1:
        raise MalformedTable(f"expected exactly one zero row, found {len(bottoms)}")
    above = [[] for _ in range(n)]
    for i, j, v in t.nonzero():
        if v not in (1, 2):
            raise MalformedTable(f"coefficient {v} at ({i},{j}) outside {{1,2}}")
        above[j].append(i)
    deg = [-1] * n
    deg[bottoms[0]] = 0
    frontier = [bottoms[0]]
    while frontier:
        nxt = []
        for j in frontier:
            for i in above[j]:
                if deg[i] == -1:
                    deg[i] = deg[j] + 1
                    nxt.append(i)
        frontier = nxt
    if -1 in deg:
        raise MalformedTable("some classes are not connected to the point class")
    for i, j, _ in t.nonzero():
        if deg[i] != deg[j] + 1:
            raise MalformedTable(f"cover ({i},{j}) is not degree-lowering by one")
    return deg


def reconstruct_labeled_poset(t: MultTable) -> LabeledPoset:
    """Recover the labeled poset from the table alone.

    Order the classes by the covers c_ij != 0, keep the join-irreducible
    ones (those covering exactly one class), label the unique minimal one
    long and every other one long or short by whether its single
    coefficient is 1.
    """
    deg = _grading(t)
    n = len(t)
    ji = sorted((i for i in range(n) if len(t.c[i]) == 1), key=lambda i: (deg[i], i))
    if n and len(ji) != max(deg):
        # a finite distributive lattice has as many join-irreducibles as its length
        raise MalformedTable(f"{len(ji)} join-irreducibles but lattice length {max(deg)}")

    below = [None] * n
    for i in sorted(range(n), key=deg.__getitem__):
        m = 1 << i
        for j in t.c[i]:
            m |= below[j]
        below[i] = m

    minimal = [i for i in ji if not any(below[i] >> k & 1 for k in ji if k != i)]
    if ji and len(minimal) != 1:
        raise MalformedTable(f"expected one minimal join-irreducible, found {len(minimal)}")
    labels = []
    for i in ji:
        if i == minimal[0]:
            labels.append(Length.LONG)
        else:
            (coef,) = t.c[i].values()
            labels.append(Length.LONG if coef == 1 else Length.SHORT)
    leq = [[bool(below[b] >> a & 1) for b in ji] for a in ji]
    return LabeledPoset(leq, labels)
