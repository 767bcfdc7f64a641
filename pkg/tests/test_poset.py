import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cominuscule.errors import NotCominuscule, ParseError
from cominuscule.layout import ideal_from_cells, layout
from cominuscule.poset import (
    brute_force_ideals,
    build_comin_poset,
    count_ideals,
    delta,
    delta_map,
    dynkin_core,
    enumerate_ideals,
    format_ideal,
    parse_ideal,
    parse_space,
    principal_ideal,
    space,
    support,
)
from cominuscule.roots import Length, root_system

from oracles import weyl_orbit_size

TABLE_2_SIZES = {"A6/P3": 12, "B6/P1": 11, "C6/P6": 21, "D6/P6": 15, "D6/P1": 10, "E6/P6": 16, "E7/P7": 27}

ALL_SPACES = (
    [f"A{n}/P{m}" for n in range(1, 7) for m in range(1, n + 1)]
    + [f"B{n}/P1" for n in range(2, 7)]
    + [f"C{n}/P{n}" for n in range(3, 7)]
    + [f"D{n}/P{m}" for n in range(4, 7) for m in (1, n - 1, n)]
    + ["E6/P1", "E6/P6", "E7/P7"]
)


@pytest.mark.parametrize("sid,size", TABLE_2_SIZES.items())
def test_table_2_sizes(sid, size):
    assert len(space(sid)) == size


@pytest.mark.parametrize("sid", ALL_SPACES)
def test_poset_structure(sid):
    p = space(sid)
    assert p.elements[0] == p.rs.simple_root(p.gamma)
    assert p.labels[0] is Length.LONG
    assert all(r[p.gamma - 1] == 1 for r in p.elements)
    assert {r for r in p.rs.positive_roots if r[p.gamma - 1] >= 1} == set(p.elements)
    for i, j in p.covers:
        assert i < j
        diff = [b - a for a, b in zip(p.elements[i], p.elements[j])]
        assert sorted(diff) == [0] * (p.rank - 1) + [1]
    for i in range(len(p)):
        for j in range(len(p)):
            expect = all(a <= b for a, b in zip(p.elements[i], p.elements[j]))
            assert p.leq(i, j) == expect


@pytest.mark.parametrize("sid", ALL_SPACES)
def test_layout_order_equals_root_order(sid):
    p = space(sid)
    pos = layout(p)
    for i in range(len(p)):
        for j in range(len(p)):
            (r1, c1), (r2, c2) = pos[i], pos[j]
            assert p.leq(i, j) == (r1 <= r2 and c1 <= c2)


def test_grassmannian_is_a_grid():
    for m, k in [(3, 4), (2, 2), (1, 5), (4, 2)]:
        p = space(f"A{m + k - 1}/P{m}")
        assert len(p) == m * k
        cells = sorted(layout(p).values())
        assert cells == [(r, c) for r in range(m) for c in range(k)]
        assert all(x is Length.LONG for x in p.labels)


def test_short_label_positions():
    # type C: exactly the boxes strictly above the diagonal
    p = space("C6/P6")
    for e, (r, c) in layout(p).items():
        assert (p.labels[e] is Length.SHORT) == (c > r)
    # type B: the single middle box of the chain
    for n in range(2, 7):
        p = space(f"B{n}/P1")
        shorts = [c for e, (_, c) in layout(p).items() if p.labels[e] is Length.SHORT]
        assert shorts == [n - 1]
    for sid in ["A6/P3", "D6/P6", "D6/P1", "E6/P6", "E7/P7"]:
        assert all(x is Length.LONG for x in space(sid).labels)


def test_not_cominuscule():
    with pytest.raises(NotCominuscule):
        build_comin_poset(root_system("C", 3), 1)
    with pytest.raises(ParseError, match="valid nodes: P1, P5, P6"):
        parse_space("D6/P2")
    with pytest.raises(ParseError):
        parse_space("G2/P1")
    with pytest.raises(ParseError):
        parse_space("B1/P1")


@pytest.mark.parametrize("sid", [s for s in ALL_SPACES if len(space(s)) <= 16])
def test_enumerate_matches_brute_force(sid):
    p = space(sid)
    got = [lam.mask for lam in enumerate_ideals(p)]
    assert sorted(got) == brute_force_ideals(p)
    assert got == sorted(got, key=lambda m: (bin(m).count("1"), m))


@pytest.mark.parametrize("sid", ALL_SPACES)
def test_ideal_count_oracles(sid):
    p = space(sid)
    t = p.rs.dynkin_type
    n = len(enumerate_ideals(p))
    assert n == count_ideals(p) == weyl_orbit_size(t.family, t.rank, p.gamma)


def test_ideal_counts():
    assert len(enumerate_ideals(space("A3/P2"))) == 6
    for n in range(2, 7):
        assert len(enumerate_ideals(space(f"B{n}/P1"))) == 2 * n
    assert len(enumerate_ideals(space("E7/P7"))) == 56
    for m in range(1, 5):
        for k in range(1, 5):
            assert len(enumerate_ideals(space(f"A{m + k - 1}/P{m}"))) == comb(m + k, m)
    for n in (3, 4, 5, 6):
        assert len(enumerate_ideals(space(f"C{n}/P{n}"))) == 2**n


def test_principal_ideal():
    p = space("A3/P2")
    assert principal_ideal(p, 0).mask == 1
    assert principal_ideal(p, len(p) - 1) == p.full()
    where = {rc: e for e, rc in layout(p).items()}
    assert principal_ideal(p, where[(1, 1)]) == p.full()
    assert len(principal_ideal(p, where[(0, 1)])) == 2


@pytest.mark.parametrize("sid", ALL_SPACES)
def test_delta_is_simple_and_preserves_length(sid):
    p = space(sid)
    d = delta_map(p)
    assert d[0] == p.gamma
    for e, node in enumerate(d):
        assert p.labels[e] is (Length.LONG if p.rs.symmetrizer[node - 1] == max(p.rs.symmetrizer) else Length.SHORT)


def test_delta_lg48_top_row():
    p = space("C4/P4")
    top = sorted((c, e) for e, (r, c) in layout(p).items() if r == 0)
    assert [delta(p, e) for _, e in top] == [4, 3, 2, 1]


def test_delta_e6_figure():
    p = space("E6/P6")
    cells = {(0, 0): 6, (0, 1): 5, (0, 2): 4, (0, 3): 2, (1, 2): 3, (2, 2): 1}
    core = dynkin_core(p)
    assert core == ideal_from_cells(p, cells)
    where = {rc: e for e, rc in layout(p).items()}
    assert {rc: delta(p, where[rc]) for rc in cells} == cells


@pytest.mark.parametrize("sid", ALL_SPACES)
def test_delta_independent_of_linear_extension(sid):
    p = space(sid)
    rng = random.Random(sid)
    for _ in range(3):
        # random linear extension: repeatedly pick a random minimal remaining element
        remaining = set(range(len(p)))
        order = []
        while remaining:
            ready = [e for e in remaining if all(i not in remaining for i in p.lower_covers[e])]
            e = rng.choice(sorted(ready))
            order.append(e)
            remaining.remove(e)
        assert delta_map(p, order) == delta_map(p)


@pytest.mark.parametrize("sid", ALL_SPACES)
def test_dynkin_core_bijects_onto_nodes(sid):
    p = space(sid)
    core = dynkin_core(p)
    assert len(core) == p.rank
    assert sorted(delta(p, e) for e in core.indices) == list(range(1, p.rank + 1))


def test_dynkin_core_examples():
    p = space("C4/P4")
    assert sorted(layout(p)[e] for e in dynkin_core(p).indices) == [(0, c) for c in range(4)]
    g = space("A5/P3")  # Gr(3,6): first row and first column
    cells = sorted(layout(g)[e] for e in dynkin_core(g).indices)
    assert cells == [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]


@pytest.mark.parametrize("sid", ALL_SPACES)
def test_support_is_connected_and_contains_gamma(sid):
    p = space(sid)
    for lam in enumerate_ideals(p):
        s = support(p, lam)
        if not lam.mask:
            assert s == frozenset()
            continue
        assert p.gamma in s
        seen, stack = {p.gamma}, [p.gamma]
        while stack:
            v = stack.pop()
            for w in p.rs.neighbours(v):
                if w in s and w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert seen == s
        # support is the set of letters of any reduced word: use every delta in lam
        assert s == {delta(p, e) for e in lam.indices}
    assert support(p, p.full()) == set(range(1, p.rank + 1))


def test_support_example_9():
    p = space("E6/P6")
    lam = ideal_from_cells(p, [(0, 0), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert support(p, lam) == {2, 3, 4, 5, 6}


def test_ideal_literals():
    p = space("A3/P2")
    assert parse_ideal(p, "full") == p.full()
    assert parse_ideal(p, "empty").mask == 0
    assert parse_ideal(p, "[0, 1]").mask == 3
    assert format_ideal(parse_ideal(p, "[0,2]")) == "[0,2]"
    with pytest.raises(ParseError):
        parse_ideal(p, "[1]")  # not downward closed
    with pytest.raises(ParseError):
        parse_ideal(p, "[0,9]")
    with pytest.raises(ParseError):
        parse_ideal(p, "0,1")


@settings(max_examples=50)
@given(st.sampled_from(ALL_SPACES), st.data())
def test_ideal_operations(sid, data):
    p = space(sid)
    ideals = enumerate_ideals(p)
    lam = data.draw(st.sampled_from(ideals))
    for e in lam.maximal():
        assert p.is_ideal_mask(lam.remove(e).mask)
    for e in lam.indices:
        assert principal_ideal(p, e) <= lam
