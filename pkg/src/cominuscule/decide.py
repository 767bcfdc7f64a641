"""Isomorphism decisions between Schubert varieties, and the census driver.

Three independent routes decide whether X_lambda and Y_mu are isomorphic:

* ``poset``   -- labeled-poset isomorphism of the ideals themselves;
* ``chow``    -- labeled posets rebuilt from shuffled Chevalley tables;
* ``minimal`` -- equal minimal models, up to symmetries of the model diagram.

``all`` runs the three and treats any disagreement as a bug.
"""
from __future__ import annotations

import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Optional

from .chow import build_mult_table, reconstruct_labeled_poset
from .errors import InternalInconsistency, ParseError, RouteDisagreement
from .labeled import LabeledPoset, abstract_poset, find_isomorphism
from .minimal import MinimalModel, minimal_embedding
from .poset import CominPoset, Ideal, enumerate_ideals, format_ideal, parse_ideal, space

log = logging.getLogger(__name__)

MODES = ("poset", "minimal", "chow", "all")
ROUTES = ("poset", "minimal", "chow")
DEFAULT_CATALOG = ["A4/P2", "B3/P1", "C4/P4", "D4/P1", "D5/P5", "E6/P6", "E7/P7"]


@dataclass(frozen=True)
class SchubertSpec:
    space_id: str
    ideal: str = "full"

    @classmethod
    def parse(cls, text: str) -> "SchubertSpec":
        """``<space>`` or ``<space>:<ideal>``, e.g. ``E6/P6:[0,1,2]``."""
        head, sep, tail = text.partition(":")
        spec = cls(head.strip(), tail.strip() if sep else "full")
        spec.resolve()
        return spec

    @classmethod
    def of(cls, lam: Ideal) -> "SchubertSpec":
        return cls(lam.poset.name, format_ideal(lam))

    def resolve(self) -> tuple[CominPoset, Ideal]:
        p = space(self.space_id)
        return p, parse_ideal(p, self.ideal)

    def __str__(self):
        return f"{self.space_id}:{self.ideal}"


@lru_cache(maxsize=None)
def _poset_of(name: str, mask: int) -> LabeledPoset:
    p = space(name)
    return abstract_poset(p, Ideal(p, mask))


@lru_cache(maxsize=None)
def _chow_poset(name: str, mask: int, seed: int) -> LabeledPoset:
    p = space(name)
    return reconstruct_labeled_poset(build_mult_table(p, Ideal(p, mask), seed))


@lru_cache(maxsize=None)
def _model(name: str, mask: int) -> MinimalModel:
    p = space(name)
    return minimal_embedding(p, Ideal(p, mask))


def _route(route: str, a: Ideal, b: Ideal, seed: int) -> tuple[bool, Any]:
    ka, kb = (a.poset.name, a.mask), (b.poset.name, b.mask)
    if route == "poset":
        f = find_isomorphism(_poset_of(*ka), _poset_of(*kb))
        return f is not None, f
    if route == "chow":
        f = find_isomorphism(_chow_poset(*ka, seed), _chow_poset(*kb, seed + 1))
        return f is not None, f
    if route == "minimal":
        ma, mb = _model(*ka), _model(*kb)
        same = ma.key == mb.key
        return same, (ma.key if same else (ma.key, mb.key))
    raise ValueError(f"unknown route {route!r}")


@dataclass
class Verdict:
    isomorphic: bool
    mode: str
    witness: Any = None
    routes: dict = field(default_factory=dict)


def decide_ideals(a: Ideal, b: Ideal, mode: str = "poset", seed: int = 0) -> Verdict:
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    routes = ROUTES if mode == "all" else (mode,)
    results = {r: _route(r, a, b, seed) for r in routes}
    verdicts = {r: v for r, (v, _) in results.items()}
    if len(set(verdicts.values())) > 1:
        raise RouteDisagreement(
            f"routes disagree on {SchubertSpec.of(a)} vs {SchubertSpec.of(b)}: {verdicts}",
            pair=(SchubertSpec.of(a), SchubertSpec.of(b)),
            verdicts=verdicts,
        )
    first = routes[0]
    return Verdict(verdicts[first], mode, results[first][1], verdicts)


def decide_isomorphic(a: SchubertSpec, b: SchubertSpec, mode: str = "poset", seed: int = 0) -> Verdict:
    return decide_ideals(a.resolve()[1], b.resolve()[1], mode, seed)


def model_name(lam: Ideal) -> str:
    m = _model(lam.poset.name, lam.mask)
    if m.ideal is None:
        return "point"
    q = space(m.space_id)
    return f"{m.space_id}:{format_ideal(Ideal(q, m.key[1]))}"


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller index stays root so representatives are deterministic
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass
class CensusClass:
    dim: int
    canonical_model: str
    members: list


@dataclass
class CensusReport:
    spaces: list
    mode: str
    classes: list
    pairs_checked: int
    route_decisions: int
    disagreements: int = 0

    def to_json(self) -> dict:
        return {
            "spaces": self.spaces,
            "mode": self.mode,
            "classes": [
                {"dim": c.dim, "canonical_model": c.canonical_model, "members": [str(m) for m in c.members]}
                for c in self.classes
            ],
            "pairs_checked": self.pairs_checked,
            "route_decisions": self.route_decisions,
            "disagreements": self.disagreements,
        }

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")


def census(spaces: list[str], mode: str = "poset", seed: int = 0) -> CensusReport:
    """Partition every Schubert variety of the given spaces into iso classes.

    Single-route modes compare each item against one representative per
    class, restricted to classes with the same cheap invariant.  ``all``
    decides every ordered pair (including self-pairs) by all three routes
    and then checks the verdicts form an equivalence relation.
    """
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r}")
    items: list[Ideal] = []
    for sid in spaces:
        items.extend(enumerate_ideals(space(sid)))
    n = len(items)
    ds = DisjointSet(n)
    pairs = 0
    per_pair = len(ROUTES) if mode == "all" else 1

    if mode == "all":
        iso = [[False] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                iso[i][j] = decide_ideals(items[i], items[j], "all", seed).isomorphic
                pairs += 1
                if iso[i][j]:
                    ds.union(i, j)
        for i in range(n):
            if not iso[i][i]:
                raise InternalInconsistency(f"{SchubertSpec.of(items[i])} not isomorphic to itself")
            for j in range(n):
                if iso[i][j] != iso[j][i]:
                    raise InternalInconsistency(f"asymmetric verdict on items {i}, {j}")
                if iso[i][j] != (ds.find(i) == ds.find(j)):
                    raise InternalInconsistency(f"verdicts not transitive around items {i}, {j}")
    else:
        buckets: dict[tuple, list[int]] = defaultdict(list)
        for i, lam in enumerate(items):
            key = _poset_of(lam.poset.name, lam.mask).prekey()
            for rep in buckets[key]:
                pairs += 1
                if decide_ideals(items[rep], lam, mode, seed).isomorphic:
                    ds.union(rep, i)
                    break
            else:
                buckets[key].append(i)

    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(n):
        groups[ds.find(i)].append(i)
    classes = []
    for root, members in groups.items():
        rep = items[root]
        classes.append(CensusClass(len(rep), model_name(rep), [SchubertSpec.of(items[k]) for k in members]))
    classes.sort(key=lambda c: (c.dim, c.canonical_model))
    log.info("census over %s: %d items, %d classes, %d pairs", spaces, n, len(classes), pairs)
    return CensusReport(list(spaces), mode, classes, pairs, pairs * per_pair, 0)


def render_dot(p: CominPoset, lam: Optional[Ideal] = None) -> str:
    """Hasse diagram in DOT; short elements are drawn as boxes marked ``s``."""
    from .roots import Length, format_root

    lam = p.full() if lam is None else lam
    lines = [f'digraph "{p.name}" {{', "  rankdir=BT;", "  node [shape=ellipse];"]
    for e in lam.indices:
        short = p.labels[e] is Length.SHORT
        label = f"{e}{' s' if short else ''}\\n{format_root(p.elements[e])}"
        attrs = f'label="{label}"' + (", shape=box" if short else "")
        lines.append(f"  n{e} [{attrs}];")
    for i, j in p.covers:
        if i in lam and j in lam:
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
