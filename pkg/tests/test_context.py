import pytest

from coxabacus import Family, GroupContext, coxeter_matrix, make_context
from coxabacus.errors import RankTooSmall

ALL_FAMILIES = list(Family)


def test_family_table():
    cc = make_context(Family.C_OVER_C, 3)
    assert (cc.fork_at_zero, cc.fork_at_n) == (False, False)
    assert (cc.x0, cc.xn) == (0, 0)
    bb = make_context(Family.B_OVER_B, 3)
    assert (bb.fork_at_zero, bb.fork_at_n) == (True, False)
    assert (bb.x0, bb.xn) == (-1, 0)
    assert bb.has_descalators and not bb.has_escalators
    bd = make_context(Family.B_OVER_D, 3)
    assert (bd.fork_at_zero, bd.fork_at_n) == (False, True)
    assert (bd.x0, bd.xn) == (0, -1)
    assert bd.has_escalators and not bd.has_descalators
    dd = make_context(Family.D_OVER_D, 4)
    assert (dd.fork_at_zero, dd.fork_at_n) == (True, True)
    assert (dd.x0, dd.xn) == (-1, -1)


def test_modulus_and_generators():
    ctx = make_context(Family.C_OVER_C, 5)
    assert ctx.N == 11
    assert list(ctx.generators()) == [0, 1, 2, 3, 4, 5]


def test_even_families():
    assert make_context(Family.B_OVER_B, 3).is_even_family
    assert make_context(Family.D_OVER_D, 4).is_even_family
    assert not make_context(Family.C_OVER_C, 2).is_even_family
    assert not make_context(Family.B_OVER_D, 3).is_even_family


@pytest.mark.parametrize(
    "family,min_rank",
    [
        (Family.C_OVER_C, 2),
        (Family.B_OVER_B, 3),
        (Family.B_OVER_D, 3),
        (Family.D_OVER_D, 4),
    ],
)
def test_rank_minima(family, min_rank):
    assert make_context(family, min_rank).n == min_rank
    with pytest.raises(RankTooSmall):
        make_context(family, min_rank - 1)


def test_json_round_trip():
    for fam in ALL_FAMILIES:
        ctx = make_context(fam, 4)
        assert GroupContext.from_json(ctx.to_json()) == ctx


def test_coxeter_matrix_c():
    ctx = make_context(Family.C_OVER_C, 3)
    m = coxeter_matrix(ctx)
    assert m[0][1] == m[1][0] == 4
    assert m[2][3] == 4
    assert m[1][2] == 3
    assert m[0][2] == 2
    assert all(m[i][i] == 1 for i in range(4))


def test_coxeter_matrix_forks():
    dd = coxeter_matrix(make_context(Family.D_OVER_D, 4))
    # s_0 forks onto s_2, s_4 forks onto s_2; adjacent pairs commute
    assert dd[0][2] == 3 and dd[0][1] == 2
    assert dd[4][2] == 3 and dd[4][3] == 2
    bd = coxeter_matrix(make_context(Family.B_OVER_D, 3))
    assert bd[0][1] == 4
    assert bd[3][1] == 3 and bd[3][2] == 2


def test_symmetry_of_matrix():
    for fam in ALL_FAMILIES:
        m = coxeter_matrix(make_context(fam, 4))
        for i in range(5):
            for j in range(5):
                assert m[i][j] == m[j][i]
