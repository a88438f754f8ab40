import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import coxabacus as cx
from coxabacus import Family
from coxabacus.bounded import (
    abacus_from_bounded,
    bounded_from_abacus,
    bounded_partition,
    make_bounded,
    parse_bounded,
    residue_filling,
    star_size,
    word_from_filling,
)
from coxabacus.errors import MalformedBounded
from coxabacus.window import apply_generator_left, identity, normalize

C3 = cx.make_context(Family.C_OVER_C, 3)
B3 = cx.make_context(Family.B_OVER_B, 3)
BD3 = cx.make_context(Family.B_OVER_D, 3)
D4 = cx.make_context(Family.D_OVER_D, 4)


def test_golden_bounded():
    lam = cx.make_core(C3, (10, 9, 6, 5, 5, 3, 2, 2, 2, 1))
    beta = bounded_partition(lam)
    assert beta.parts == (5, 5, 4, 2, 1)
    assert beta.star is None
    assert str(beta) == "(5,5,4,2,1)"


def test_star_size_per_family():
    assert star_size(C3) is None
    assert star_size(B3) is None
    assert star_size(BD3) == 3
    assert star_size(D4) == 3


def test_parse_and_str_round_trip():
    beta = parse_bounded(BD3, "(3*,2)")
    assert beta.parts == (3, 2) and beta.star == 0
    assert str(beta) == "(3*,2)"
    assert parse_bounded(C3, "(5,5,4,2,1)").parts == (5, 5, 4, 2, 1)
    assert parse_bounded(C3, "()").parts == ()


def test_part_bound():
    # parts are bounded by 2n + x0 + xn
    make_bounded(C3, (6,))
    with pytest.raises(MalformedBounded):
        make_bounded(C3, (7,))
    make_bounded(D4, (6,))
    with pytest.raises(MalformedBounded):
        make_bounded(D4, (7,))


def test_small_parts_distinct():
    with pytest.raises(MalformedBounded):
        make_bounded(C3, (2, 2))
    make_bounded(C3, (5, 5))  # parts above n + x0 + xn may repeat


def test_star_rules():
    with pytest.raises(MalformedBounded):
        make_bounded(C3, (3, 2), star=0)  # family has no star
    with pytest.raises(MalformedBounded):
        make_bounded(BD3, (4, 2), star=0)  # wrong size
    beta = make_bounded(BD3, (3, 3, 1), star=0)
    assert beta.star == 1  # canonicalized to the last part of that size


def test_starred_part_may_repeat_its_size():
    beta = make_bounded(BD3, (3, 3), star=1)
    assert beta.parts == (3, 3) and beta.star == 1


def test_abacus_round_trip(tables):
    for (fam, n), table in tables.items():
        for w in table.elements():
            a = cx.from_permutation(w)
            beta = bounded_from_abacus(a)
            assert abacus_from_bounded(beta).levels == a.levels
            assert beta == bounded_partition(cx.from_abacus(a))


def test_filling_word_matches_peel(tables):
    for (fam, n), table in tables.items():
        for w in table.elements():
            lam = cx.from_abacus(cx.from_permutation(w))
            letters, _ = cx.central_peel(lam)
            assert word_from_filling(bounded_partition(lam)) == letters


def test_filling_grid_shape():
    beta = make_bounded(C3, (5, 5, 4, 2, 1))
    grid = residue_filling(beta)
    assert [len(row) for row in grid] == [5, 5, 4, 2, 1]
    assert all(0 <= v <= C3.n for row in grid for v in row)


def test_filling_star_steering():
    starred = make_bounded(BD3, (3,), star=0)
    plain = make_bounded(BD3, (3,))
    assert residue_filling(starred)[0][2] == 2
    assert residue_filling(plain)[0][2] == 3


WORD = st.lists(st.integers(min_value=0, max_value=3), max_size=10)


@settings(max_examples=50, deadline=None)
@given(WORD)
def test_parse_round_trip_on_random_elements(word):
    w = identity(BD3)
    for g in word:
        w = normalize(apply_generator_left(w, g))
    beta = bounded_from_abacus(cx.from_permutation(w))
    assert parse_bounded(BD3, str(beta)) == beta
