from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cominuscule.errors import InvalidRank, NotARoot
from cominuscule.roots import (
    DynkinType,
    Length,
    inner_product,
    length_class,
    reflect,
    root_system,
)

TYPES = [("A", n) for n in range(1, 8)] + [("B", n) for n in range(2, 7)] + [
    ("C", n) for n in range(3, 7)
] + [("D", n) for n in range(4, 8)] + [("E", 6), ("E", 7)]


def classical_count(family, n):
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63}.get(n),
    }[family]


TABLE_1 = {
    "A": lambda n: set(range(1, n + 1)),
    "B": lambda n: {1},
    "C": lambda n: {n},
    "D": lambda n: {1, n - 1, n},
    "E": lambda n: {6: {1, 6}, 7: {7}}[n],
}


@pytest.mark.parametrize("family,n", TYPES)
def test_positive_root_count_and_highest_root(family, n):
    rs = root_system(family, n)
    assert len(rs.positive_roots) == classical_count(family, n)
    assert all(all(h >= c for h, c in zip(rs.highest_root, r)) for r in rs.positive_roots)
    heights = [sum(r) for r in rs.positive_roots]
    assert heights == sorted(heights)


@pytest.mark.parametrize("family,n", TYPES)
def test_cominuscule_nodes_match_table(family, n):
    assert root_system(family, n).cominuscule_nodes == TABLE_1[family](n)


@pytest.mark.parametrize("family,n", TYPES)
def test_symmetrizer_symmetrizes(family, n):
    rs = root_system(family, n)
    a, d = rs.cartan, rs.symmetrizer
    assert all(d[i] * a[i][j] == d[j] * a[j][i] for i in range(n) for j in range(n))
    assert min(d) == 1


@pytest.mark.parametrize("family,n", TYPES)
def test_length_classes(family, n):
    rs = root_system(family, n)
    sq = {inner_product(r, r, rs) for r in rs.positive_roots}
    classes = {length_class(r, rs) for r in rs.positive_roots}
    if family in "ADE":
        assert len(sq) == 1 and classes == {Length.LONG}
    else:
        assert len(sq) == 2 and max(sq) == 2 * min(sq)
        assert classes == {Length.LONG, Length.SHORT}


@pytest.mark.parametrize("family,n", TYPES)
def test_simple_reflection_permutes_other_positive_roots(family, n):
    rs = root_system(family, n)
    for i in range(1, n + 1):
        rest = set(rs.positive_roots) - {rs.simple_root(i)}
        assert {reflect(r, i, rs) for r in rest} == rest


def test_examples():
    a3 = root_system("A", 3)
    assert len(a3.positive_roots) == 6
    assert a3.highest_root == (1, 1, 1)
    assert a3.cominuscule_nodes == {1, 2, 3}
    c3 = root_system("C", 3)
    assert c3.highest_root == (2, 2, 1)
    assert c3.cominuscule_nodes == {3}
    e7 = root_system("E", 7)
    assert len(e7.positive_roots) == 63
    assert e7.cominuscule_nodes == {7}


def test_inner_products():
    a2 = root_system("A", 2)
    assert inner_product((1, 0), (1, 0), a2) == 2
    assert inner_product((1, 0), (0, 1), a2) == -1
    c3 = root_system("C", 3)
    a1, a3 = c3.simple_root(1), c3.simple_root(3)
    assert Fraction(inner_product(a3, a3, c3), inner_product(a1, a1, c3)) == 2


def test_length_ratio_is_normalization_independent():
    # rescaling the symmetrizer rescales every inner product alike
    c3 = root_system("C", 3)
    gamma = c3.simple_root(3)

    def ip(a, b, scale):
        return sum(
            a[i] * b[j] * scale * c3.symmetrizer[i] * c3.cartan[i][j]
            for i in range(3)
            for j in range(3)
        )

    for r in c3.positive_roots:
        ratios = {Fraction(ip(gamma, gamma, s), ip(r, r, s)) for s in (1, 3, 7)}
        assert len(ratios) == 1


def test_length_class_examples():
    e6 = root_system("E", 6)
    assert all(length_class(r, e6) is Length.LONG for r in e6.positive_roots)
    assert length_class((0, 0, 1), root_system("B", 3)) is Length.SHORT
    assert length_class((0, 0, 1), root_system("C", 3)) is Length.LONG
    assert length_class((0, 0, -1), root_system("C", 3)) is Length.LONG
    with pytest.raises(NotARoot):
        length_class((1, 0, 1), root_system("A", 3))


def test_reflect_examples():
    a2 = root_system("A", 2)
    assert reflect((1, 0), 1, a2) == (-1, 0)
    assert reflect((0, 1), 1, a2) == (1, 1)


@given(st.sampled_from(TYPES), st.data())
def test_reflect_is_involution(t, data):
    rs = root_system(*t)
    r = data.draw(st.sampled_from(rs.positive_roots))
    i = data.draw(st.integers(1, rs.rank))
    assert reflect(reflect(r, i, rs), i, rs) == r
    assert rs.is_root(reflect(r, i, rs))


@pytest.mark.parametrize("family,n", [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 8), ("F", 4)])
def test_invalid_rank(family, n):
    with pytest.raises(InvalidRank):
        DynkinType(family, n)
