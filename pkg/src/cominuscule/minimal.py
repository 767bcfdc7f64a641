"""Minimal cominuscule model of a Schubert variety.

The support of an ideal spans a connected subdiagram containing the marked
node; that marked diagram is again cominuscule, and the ideal transports
into its poset.  Diagrams are recognised from their shape (path, one fork,
arm lengths) and edge weights, never from the inherited node numbers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import EmptyIdeal, InternalInconsistency, NotCominusculeDiagram
from .poset import CominPoset, Ideal, iter_bits, space, support
from .roots import Root, RootSystem, root_system

POINT = "point"


@dataclass(frozen=True)
class MarkedDiagram:
    """Dynkin diagram with a marked vertex.

    Edges are ``(u, v, weight)``; simple edges have u < v, double edges
    point from the long vertex u to the short vertex v.
    """

    vertices: frozenset
    edges: frozenset
    marked: int

    def neighbours(self, v) -> list:
        out = []
        for a, b, _ in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.marked}
        stack = [self.marked]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == set(self.vertices)

    def edge_key(self, a, b) -> Optional[tuple]:
        """(weight, a_is_long_end) for the edge between a and b, or None."""
        for u, v, w in self.edges:
            if {u, v} == {a, b}:
                return (w, u == a if w == 2 else None)
        return None


def _diagram_edges(rs: RootSystem, vertices) -> frozenset:
    out = set()
    for i, j, w in rs.edges():
        if i in vertices and j in vertices:
            if w == 1:
                out.add((i, j, 1))
            elif rs.symmetrizer[i - 1] > rs.symmetrizer[j - 1]:
                out.add((i, j, w))
            else:
                out.add((j, i, w))
    return frozenset(out)


def full_diagram(rs: RootSystem, marked: int) -> MarkedDiagram:
    verts = frozenset(range(1, rs.rank + 1))
    return MarkedDiagram(verts, _diagram_edges(rs, verts), marked)


def restricted_diagram(p: CominPoset, lam: Ideal) -> MarkedDiagram:
    if lam.mask == 0:
        raise EmptyIdeal("the empty ideal (a point) has no marked diagram")
    verts = support(p, lam)
    d = MarkedDiagram(verts, _diagram_edges(p.rs, verts), p.gamma)
    if not d.is_connected():
        raise InternalInconsistency(f"support {sorted(verts)} of {lam} is disconnected")
    return d


def canonical_node(family: str, rank: int, node: int) -> tuple[str, int, int]:
    """Resolve the coincidences between cominuscule pairs.

    D3 = A3 and C2 = B2 only arise from subdiagrams; the rest are diagram
    symmetries (see COINCIDENCES).
    """
    if family == "D" and rank == 3:
        # D3 nodes: 1 is the middle of the path 2-1-3
        return canonical_node("A", 3, 2 if node == 1 else 1)
    if family == "C" and rank == 2 and node == 2:
        return ("B", 2, 1)
    if family == "A" and node > rank + 1 - node:
        return ("A", rank, rank + 1 - node)
    if family == "D" and rank == 4 and node in (3, 4):
        return ("D", 4, 1)
    if family == "D" and node == rank - 1:
        return ("D", rank, rank)
    if family == "E" and rank == 6 and node == 1:
        return ("E", 6, 6)
    return (family, rank, node)


# identifications made by canonical_node on spaces that can be built directly;
# tests confirm each one with find_isomorphism on the full posets
COINCIDENCES = [
    ("A3/P3", "A3/P1"),
    ("A5/P4", "A5/P2"),
    ("A6/P5", "A6/P2"),
    ("D4/P3", "D4/P1"),
    ("D4/P4", "D4/P1"),
    ("D5/P4", "D5/P5"),
    ("D6/P5", "D6/P6"),
    ("E6/P1", "E6/P6"),
]


def _walk(d: MarkedDiagram, start, prev=None) -> list:
    """Vertices along the unbranched walk from start, away from prev."""
    path = [start]
    while True:
        nxt = [w for w in d.neighbours(path[-1]) if w != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _recognise(d: MarkedDiagram) -> tuple[str, int, int]:
    k = len(d.vertices)
    if d.marked not in d.vertices or not d.is_connected() or len(d.edges) != k - 1:
        raise NotCominusculeDiagram("diagram must be a connected tree containing the mark")
    if k == 1:
        return ("A", 1, 1)
    deg = {v: len(d.neighbours(v)) for v in d.vertices}
    doubles = [e for e in d.edges if e[2] == 2]
    if any(e[2] not in (1, 2) for e in d.edges) or len(doubles) > 1:
        raise NotCominusculeDiagram("edge weights are not of a doubly laced Dynkin type")
    leaves = sorted(v for v in d.vertices if deg[v] == 1)
    forks = [v for v in d.vertices if deg[v] >= 3]

    if doubles:
        long_end, short_end, _ = doubles[0]
        if forks:
            raise NotCominusculeDiagram("double edge on a branched diagram")
        if k == 2:
            if d.marked == long_end:
                return ("B", 2, 1)
            raise NotCominusculeDiagram("B2 marked at the short node is not cominuscule")
        if deg[short_end] == 1:
            # B_k: path 1..k with node k short
            path = _walk(d, leaves[0] if leaves[0] != short_end else leaves[1])
            if d.marked == path[0]:
                return ("B", k, 1)
            raise NotCominusculeDiagram(f"B{k} shape marked away from node 1")
        if deg[long_end] == 1:
            if d.marked == long_end:
                return ("C", k, k)
            raise NotCominusculeDiagram(f"C{k} shape marked away from node {k}")
        raise NotCominusculeDiagram("double edge not at the end of the path")

    if not forks:
        path = _walk(d, leaves[0])
        return ("A", k, path.index(d.marked) + 1)
    if len(forks) > 1 or deg[forks[0]] > 3:
        raise NotCominusculeDiagram("more than one branch point")
    fork = forks[0]
    arms = sorted(
        (_walk(d, start, fork) for start in d.neighbours(fork)), key=len
    )
    lengths = tuple(len(a) for a in arms)
    if lengths[:2] == (1, 1):
        # D_k: long arm ends at node 1, short leaves are k-1 and k
        if d.marked == arms[2][-1]:
            return ("D", k, 1)
        if d.marked in (arms[0][0], arms[1][0]):
            return ("D", k, k)
        raise NotCominusculeDiagram(f"D{k} shape marked at a non-cominuscule node")
    if lengths == (1, 2, 2):
        if d.marked in (arms[1][-1], arms[2][-1]):
            return ("E", 6, 6)
        raise NotCominusculeDiagram("E6 shape marked at a non-cominuscule node")
    if lengths == (1, 2, 3):
        if d.marked == arms[2][-1]:
            return ("E", 7, 7)
        raise NotCominusculeDiagram("E7 shape marked at a non-cominuscule node")
    raise NotCominusculeDiagram(f"branched diagram with arms {lengths} is not cominuscule")


def diagram_isomorphisms(src: MarkedDiagram, dst: MarkedDiagram):
    """All marked, weight- and arrow-preserving bijections, as dicts."""
    sv = sorted(src.vertices)
    dv = sorted(dst.vertices)
    if len(sv) != len(dv) or len(src.edges) != len(dst.edges):
        return
    for perm in itertools.permutations(dv):
        f = dict(zip(sv, perm))
        if f[src.marked] != dst.marked:
            continue
        if all(
            src.edge_key(a, b) == dst.edge_key(f[a], f[b])
            for a, b in itertools.combinations(sv, 2)
        ):
            yield f


@lru_cache(maxsize=None)
def classify_marked(d: MarkedDiagram) -> tuple[str, tuple[tuple[int, int], ...]]:
    """Canonical space id and the vertex relabeling (sorted (vertex, node) pairs).

    The relabeling is the lexicographically least marked-diagram isomorphism
    onto the canonical space's diagram.
    """
    family, rank, node = canonical_node(*_recognise(d))
    target = full_diagram(root_system(family, rank), node)
    best = None
    for f in diagram_isomorphisms(d, target):
        key = tuple(f[v] for v in sorted(d.vertices))
        if best is None or key < best:
            best = key
    if best is None:
        raise InternalInconsistency(f"recognised {family}{rank}/P{node} but found no isomorphism")
    return f"{family}{rank}/P{node}", tuple(zip(sorted(d.vertices), best))


def canonical_space_id(space_id: str) -> str:
    p = space(space_id)
    return classify_marked(full_diagram(p.rs, p.gamma))[0]


@dataclass(frozen=True)
class MinimalModel:
    space_id: str
    ideal: Optional[Ideal]
    relabel: tuple[tuple[int, int], ...]

    @property
    def key(self) -> tuple[str, int]:
        if self.ideal is None:
            return (POINT, 0)
        return (self.space_id, min(_automorphism_masks(self.space_id, self.ideal.mask)))


def transport_root(r: Root, relabel: dict, rank: int) -> Root:
    out = [0] * rank
    for v, c in enumerate(r, start=1):
        if c:
            if v not in relabel:
                raise InternalInconsistency(f"root {r} leaves the support")
            out[relabel[v] - 1] = c
    return tuple(out)


def minimal_embedding(p: CominPoset, lam: Ideal) -> MinimalModel:
    if lam.mask == 0:
        return MinimalModel(POINT, None, ())
    sid, relabel = classify_marked(restricted_diagram(p, lam))
    q = space(sid)
    rl = dict(relabel)
    idx = []
    for r in lam.roots:
        t = transport_root(r, rl, q.rank)
        if t not in q.index:
            raise InternalInconsistency(f"{r} transports to {t}, not an element of {sid}")
        idx.append(q.index[t])
    mu = q.ideal(idx)
    if len(mu) != len(lam):
        raise InternalInconsistency("transport changed the dimension")
    return MinimalModel(sid, mu, relabel)


@lru_cache(maxsize=None)
def diagram_automorphisms(space_id: str) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Mark-preserving symmetries of the space's diagram, identity first."""
    p = space(space_id)
    d = full_diagram(p.rs, p.gamma)
    auts = [tuple(sorted(f.items())) for f in diagram_isomorphisms(d, d)]
    return tuple(sorted(auts, key=lambda a: a != tuple((v, v) for v in sorted(d.vertices))))


@lru_cache(maxsize=None)
def _automorphism_masks(space_id: str, mask: int) -> tuple[int, ...]:
    q = space(space_id)
    out = []
    for aut in diagram_automorphisms(space_id):
        f = dict(aut)
        m = 0
        for e in iter_bits(mask):
            m |= 1 << q.index[transport_root(q.elements[e], f, q.rank)]
        out.append(m)
    return tuple(out)


def automorphic_images(lam: Ideal) -> list[Ideal]:
    q = lam.poset
    return [Ideal(q, m) for m in _automorphism_masks(q.name, lam.mask)]
