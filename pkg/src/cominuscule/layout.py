"""Box layouts of the cominuscule posets, for display and for naming ideals.

Each layout is a list of ``(row, col, short)`` cells transcribed from the
standard pictures: boxes ordered weakly north-west.  The cells are matched
to root-poset elements by a labeled-poset isomorphism, so a layout that
disagreed with the root order (or its long/short pattern) fails loudly.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import InternalInconsistency, ParseError
from .labeled import LabeledPoset, abstract_poset, find_isomorphism
from .poset import CominPoset, Ideal
from .roots import Length

Cell = tuple[int, int]


def _rows(spec: Iterable[tuple[int, int]]) -> list[Cell]:
    """Cells from (first_col, length) per row."""
    return [(r, c) for r, (start, size) in enumerate(spec) for c in range(start, start + size)]


_E6 = [(0, 4), (2, 4), (2, 4), (4, 4)]
_E7 = [(0, 6), (3, 3), (4, 3), (4, 5), (4, 5), (7, 2), (8, 1), (8, 1), (8, 1)]


def layout_cells(family: str, rank: int, node: int) -> list[tuple[int, int, bool]]:
    n = rank
    if family == "A":
        m, k = node, n + 1 - node
        return [(r, c, False) for r in range(m) for c in range(k)]
    if family == "B":
        # single s box in the middle of the 2n-1 chain
        return [(0, c, c == n - 1) for c in range(2 * n - 1)]
    if family == "C":
        return [(r, c, c > r) for r in range(n) for c in range(r, n)]
    if family == "D":
        if node == 1:
            cells = _rows([(0, n - 1), (n - 3, n - 1)])
        else:
            cells = [(r, c) for r in range(n - 1) for c in range(r, n - 1)]
        return [(r, c, False) for r, c in cells]
    if family == "E":
        return [(r, c, False) for r, c in _rows(_E6 if n == 6 else _E7)]
    raise ValueError(family)


def layout_poset(cells) -> LabeledPoset:
    leq = [[r1 <= r2 and c1 <= c2 for (r2, c2, _) in cells] for (r1, c1, _) in cells]
    label = [Length.SHORT if s else Length.LONG for (_, _, s) in cells]
    return LabeledPoset(leq, label)


@lru_cache(maxsize=None)
def layout(p: CominPoset) -> dict[int, Cell]:
    """Map element index -> (row, col)."""
    t = p.rs.dynkin_type
    cells = layout_cells(t.family, t.rank, p.gamma)
    f = find_isomorphism(layout_poset(cells), abstract_poset(p, p.full()))
    if f is None:
        raise InternalInconsistency(f"layout of {p.name} does not match its root poset")
    return {f[k]: (r, c) for k, (r, c, _) in enumerate(cells)}


def ideal_from_cells(p: CominPoset, cells: Iterable[Cell]) -> Ideal:
    where = {rc: e for e, rc in layout(p).items()}
    idx = []
    for rc in cells:
        if tuple(rc) not in where:
            raise ParseError(f"no box at {rc} in {p.name}")
        idx.append(where[tuple(rc)])
    return p.ideal(idx)


def render(p: CominPoset, lam: Ideal | None = None, mark=None) -> str:
    """Text picture: each box shows its index, an ``s`` if short.

    With an ideal, boxes outside it are drawn as dots.
    """
    pos = layout(p)
    rows = 1 + max(r for r, _ in pos.values())
    cols = 1 + max(c for _, c in pos.values())
    grid = [["    " for _ in range(cols)] for _ in range(rows)]
    for e, (r, c) in pos.items():
        if lam is not None and e not in lam:
            txt = "."
        else:
            txt = str(e) + ("s" if p.labels[e] is Length.SHORT else "")
            if mark is not None:
                txt = str(mark(e))
        grid[r][c] = f"{txt:>4}"
    return "\n".join("".join(row).rstrip() for row in grid)
