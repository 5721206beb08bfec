from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from sharpdim.slopes import (INF, ZERO, Slope, det, farey_parents, farey_split, farey_tree,
                             is_triad, make_slope)
from oracles import stern_brocot_parents

S = make_slope


def test_make_slope_normalizes():
    assert S(6, 4) == Slope(3, 2)
    assert S(-1, 0) == INF
    assert S(5, -1) == Slope(-5, 1)
    assert S(0, -7) == ZERO
    with pytest.raises(ValueError):
        S(0, 0)
    with pytest.raises(ValueError):
        Slope(2, 4)


@pytest.mark.parametrize("text,expected", [("3/2", S(3, 2)), ("inf", INF), ("-5", S(-5, 1)),
                                           ("4/-6", S(-2, 3))])
def test_parse(text, expected):
    assert Slope.parse(text) == expected


def test_print_roundtrip():
    for s in (S(3, 2), INF, S(-7, 1), ZERO):
        assert Slope.parse(str(s)) == s


def test_order():
    assert S(1, 3) < S(1, 2) < S(1, 1)
    assert sorted([S(2, 1), S(-1, 2), S(0, 1)]) == [S(-1, 2), S(0, 1), S(2, 1)]
    with pytest.raises(TypeError):
        _ = INF < S(1, 1)


def test_is_triad_examples():
    t = is_triad(INF, ZERO, S(1, 1))
    assert t.representatives == ((1, 0), (0, 1), (-1, -1))
    assert is_triad(S(-1, 1), ZERO, INF) is not None
    assert is_triad(ZERO, S(2, 1), INF) is None
    assert is_triad(ZERO, ZERO, INF) is None


def _brute_triad(slopes):
    # all sign choices that work, straight from the definition
    base = [(s.num, s.den) for s in slopes]
    found = []
    for a in (1, -1):
        for b in (1, -1):
            for c in (1, -1):
                reps = [(a * base[0][0], a * base[0][1]), (b * base[1][0], b * base[1][1]),
                        (c * base[2][0], c * base[2][1])]
                if all(det(reps[i], reps[(i + 1) % 3]) == 1 for i in range(3)):
                    found.append(tuple(reps))
    return found


small_slopes = st.one_of(
    st.just(INF),
    st.builds(S, st.integers(-6, 6), st.integers(1, 6)),
)


@given(small_slopes, small_slopes, small_slopes)
def test_is_triad_matches_definition(a, b, c):
    t = is_triad(a, b, c)
    brute = _brute_triad((a, b, c))
    assert (t is None) == (not brute)
    if t:
        assert t.representatives == brute[0]
        assert is_triad(b, c, a) is not None


def test_farey_split_examples():
    # r1 is always the larger parent; the other order breaks the triad condition
    assert farey_split(S(2, 3)) == (S(1, 1), S(1, 2), ZERO)
    assert farey_split(S(1, 3)) == (S(1, 2), ZERO, S(1, 1))
    assert farey_split(S(-1, 2)) == (ZERO, S(-1, 1), INF)
    assert farey_split(S(1, 2)) == (S(1, 1), ZERO, INF)


@pytest.mark.parametrize("bad", [S(3, 1), ZERO, INF, S(0, 1)])
def test_farey_split_rejects(bad):
    with pytest.raises(ValueError):
        farey_split(bad)


def _split_conditions(r0):
    r1, r2, r3 = farey_split(r0)
    fl, ce = math.floor(r0.value), math.ceil(r0.value)
    sp = 1 if r0.num > 0 else -1
    assert fl <= r1.value <= ce and fl <= r2.value <= ce
    assert r1.num + r2.num == r0.num and r1.den + r2.den == r0.den
    assert (r1.num == 0 or (r1.num > 0) == (sp > 0)) and (r2.num == 0 or (r2.num > 0) == (sp > 0))
    assert r3 == S(sp * abs(r1.num - r2.num), abs(r1.den - r2.den))
    assert is_triad(r0, r1, r2) is not None
    assert is_triad(r1, r3, r2) is not None


@given(st.integers(-300, 300), st.integers(2, 50))
def test_farey_split_properties(p, q):
    if p == 0 or math.gcd(p, q) != 1:
        return
    _split_conditions(S(p, q))


@given(st.integers(-300, 300), st.integers(2, 50))
def test_parents_match_stern_brocot(p, q):
    if p == 0 or math.gcd(p, q) != 1:
        return
    hi, lo = stern_brocot_parents(Fraction(p, q))
    a, b = farey_parents(S(p, q))
    assert (a.value, b.value) == (hi, lo)


def test_farey_tree_examples():
    t = farey_tree(S(2, 3))
    assert [c.slope for c in t.children] == [S(1, 1), S(1, 2), ZERO]
    assert [c.slope for c in t.children[1].children] == [S(1, 1), ZERO, INF]
    assert farey_tree(S(5, 1)).children == ()
    assert farey_tree(S(29, 5)).depth <= 5


@given(st.integers(-300, 300), st.integers(1, 50))
def test_farey_tree_leaves(p, q):
    if math.gcd(p, q) != 1:
        return
    for leaf in farey_tree(S(p, q)).leaves():
        assert leaf.is_integer or leaf.is_infinite
