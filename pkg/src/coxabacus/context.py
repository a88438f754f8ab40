"""Group context: family, rank, generator alphabet and Coxeter matrix.

Each of the four families realizes a quotient W~/W of an affine Weyl group
by its finite part.  The context fixes the rank n, the modulus N = 2n+1,
which flavor the end generators s_0 and s_n take, and the bookkeeping
offsets used by the bounded-partition and length computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import RankTooSmall


class Family(Enum):
    C_OVER_C = "C~/C"
    B_OVER_B = "B~/B"
    B_OVER_D = "B~/D"
    D_OVER_D = "D~/D"


# smallest rank at which the Coxeter graph of the family is non-degenerate
MIN_RANK = {
    Family.C_OVER_C: 2,
    Family.B_OVER_B: 3,
    Family.B_OVER_D: 3,
    Family.D_OVER_D: 4,
}


@dataclass(frozen=True)
class GroupContext:
    family: Family
    n: int

    @property
    def N(self) -> int:
        return 2 * self.n + 1

    @property
    def fork_at_zero(self) -> bool:
        """True when s_0 is the D-flavor generator (fork on the left end)."""
        return self.family in (Family.B_OVER_B, Family.D_OVER_D)

    @property
    def fork_at_n(self) -> bool:
        """True when s_n is the D-flavor generator (fork on the right end)."""
        return self.family in (Family.B_OVER_D, Family.D_OVER_D)

    @property
    def is_even_family(self) -> bool:
        """Families whose abaci and cores satisfy an evenness condition."""
        return self.fork_at_zero

    @property
    def x0(self) -> int:
        return -1 if self.fork_at_zero else 0

    @property
    def xn(self) -> int:
        return -1 if self.fork_at_n else 0

    @property
    def has_descalators(self) -> bool:
        return self.fork_at_zero

    @property
    def has_escalators(self) -> bool:
        return self.fork_at_n

    def generators(self) -> range:
        return range(self.n + 1)

    def to_json(self) -> dict:
        return {"family": self.family.value, "n": self.n}

    @staticmethod
    def from_json(obj: dict) -> "GroupContext":
        return make_context(Family(obj["family"]), int(obj["n"]))


def make_context(family: Family, n: int) -> GroupContext:
    if n < MIN_RANK[family]:
        raise RankTooSmall(
            f"family {family.value} requires rank >= {MIN_RANK[family]}, got {n}"
        )
    return GroupContext(family, n)


def coxeter_matrix(ctx: GroupContext) -> list[list[int]]:
    """Bond orders m(i,j) for the generator alphabet 0..n.

    The underlying graph is a path 2,...,n-2 of unlabeled (order 3) edges,
    closed off on each end either by a 4-bond to the path (C flavor) or by
    a fork of two 3-bonds (D flavor).
    """
    n = ctx.n
    m = [[2] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        m[i][i] = 1

    def bond(i, j, order):
        m[i][j] = order
        m[j][i] = order

    for i in range(1, n - 1):
        bond(i, i + 1, 3)
    if ctx.fork_at_zero:
        bond(0, 2, 3)
    else:
        bond(0, 1, 4)
    if ctx.fork_at_n:
        bond(n - 2, n, 3)
        bond(n - 1, n, 2)
    else:
        bond(n - 1, n, 4)
    return m
