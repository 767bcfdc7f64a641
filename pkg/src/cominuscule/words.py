"""Reduced words and inversion sets for the minimal coset representatives.

A word ``[i1, i2, ..., il]`` stands for the product s_il ... s_i2 s_i1, so
the first letter acts first on a root.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError
from .poset import CominPoset, Ideal, _delta_cached, apply_word, iter_bits
from .roots import Root, RootSystem


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(str(i) for i in self.letters) if self.letters else "(identity)"


def reduced_word(p: CominPoset, lam: Ideal) -> Word:
    d = _delta_cached(p)
    return Word(tuple(d[e] for e in iter_bits(lam.mask)))


def act(w: Word | Sequence[int], a: Root, rs: RootSystem) -> Root:
    letters = w.letters if isinstance(w, Word) else w
    return apply_word(letters, tuple(a), rs)


def is_negative(a: Root) -> bool:
    return any(x < 0 for x in a)


def inversion_set(w: Word | Sequence[int], rs: RootSystem) -> frozenset[Root]:
    return frozenset(a for a in rs.positive_roots if is_negative(act(w, a, rs)))


def parse_word(text: str, rank: int) -> Word:
    body = text.strip().strip("[]").replace(",", " ").split()
    try:
        letters = tuple(int(x) for x in body)
    except ValueError as exc:
        raise ParseError(f"bad word {text!r}; expected node indices like 3,2,4") from exc
    for i in letters:
        if not 1 <= i <= rank:
            raise ParseError(f"letter {i} out of range 1..{rank}")
    return Word(letters)
