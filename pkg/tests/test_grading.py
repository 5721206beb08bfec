import itertools

import pytest
from hypothesis import given, strategies as st

from sharpdim.grading import (K_CLASSES, GradedDim, InfeasibleTriangleError, congruence_violations,
                              consistent_sign_pairs, propagate_triangle, shift_table, two_step,
                              vw_contradiction)

quads = st.builds(GradedDim, *[st.integers(1, 6)] * 4)


def test_tables_verbatim():
    assert shift_table("positive", "trivial") == (0, 0, 3, 0, 2, 1)
    assert shift_table("zero", "meridian") == (3, 0, 0, 2, 0, 1)
    assert shift_table("negative", "meridian") == (0, 3, 0, 0, 1, 2)
    assert congruence_violations() == []


def test_shift_is_cyclic():
    assert GradedDim(1, 2, 3, 4).shift(1) == GradedDim(4, 1, 2, 3)
    assert GradedDim(1, 2, 3, 4).shift(4) == GradedDim(1, 2, 3, 4)


def test_route_quadruples():
    a, b, c, d = 5, 6, 7, 8
    x = GradedDim(a, b, c, d)
    step = propagate_triangle(x, (0, 0, 3), -1)
    assert step == GradedDim(a, b, c, d - 1)
    assert propagate_triangle(step, (0, 2, 1), 1) == GradedDim(a, b, c + 1, d - 1)
    assert two_step("positive", "meridian", x, -1) == GradedDim(a + 1, b - 1, c, d)


def test_vw_examples():
    assert two_step("positive", "trivial", GradedDim(2, 1, 1, 1), -1) == GradedDim(2, 1, 2, 0)
    assert two_step("positive", "meridian", GradedDim(2, 1, 1, 1), -1) == GradedDim(3, 0, 1, 1)
    assert vw_contradiction("positive", GradedDim(2, 1, 1, 1))
    assert vw_contradiction("zero", GradedDim(1, 1, 1, 1))
    with pytest.raises(InfeasibleTriangleError):
        vw_contradiction("positive", GradedDim(0, 0, 0, 0))


@given(quads, st.sampled_from([(0, 0, 3), (3, 2, 2), (1, 2, 0)]), st.sampled_from([1, -1]))
def test_propagation_changes_total_by_delta(x, shifts, delta):
    assert propagate_triangle(x, shifts, delta).total == x.total + delta


@given(quads, st.sampled_from(K_CLASSES))
def test_only_opposite_signs_are_consistent(x, kc):
    assert consistent_sign_pairs(kc, x) == {(1, -1), (-1, 1)}


@given(quads, st.sampled_from(K_CLASSES))
def test_lift_choice_does_not_matter(x, kc):
    for sign in (1, -1):
        assert two_step(kc, "meridian", x, sign, "s0") == two_step(kc, "meridian", x, sign, "s1")
    assert vw_contradiction(kc, x, "s0") == vw_contradiction(kc, x, "s1")


def test_vw_exhaustive_small():
    for kc in K_CLASSES:
        for parts in itertools.product(range(1, 4), repeat=4):
            assert vw_contradiction(kc, GradedDim(*parts))
