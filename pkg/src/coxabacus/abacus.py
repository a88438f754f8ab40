"""Balanced flush abacus diagrams on 2n runners.

The abacus is stored as a level vector: levels[r-1] is the level of the
lowest bead on runner r, so position mN+r holds a bead iff m <= levels[r-1].
Balance means the levels of mirrored runners r and N-r cancel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import GroupContext
from .errors import BalanceViolation, NotActiveBead, ParityViolation
from .window import MirroredPermutation, generator_value, normalize


@dataclass(frozen=True)
class Abacus:
    ctx: GroupContext
    levels: tuple[int, ...]

    def level(self, runner: int) -> int:
        return self.levels[runner - 1]

    def to_json(self) -> dict:
        return {"ctx": self.ctx.to_json(), "levels": list(self.levels)}


def runner_of(ctx: GroupContext, value: int) -> int:
    r = value % ctx.N
    if r == 0:
        raise ValueError(f"no abacus entry at multiples of N: {value}")
    return r


def level_of(ctx: GroupContext, value: int) -> int:
    return (value - runner_of(ctx, value)) // ctx.N


def make_abacus(ctx: GroupContext, levels) -> Abacus:
    levels = tuple(int(x) for x in levels)
    if len(levels) != 2 * ctx.n:
        raise BalanceViolation(f"need {2 * ctx.n} runner levels")
    for i in range(1, 2 * ctx.n + 1):
        if levels[i - 1] + levels[ctx.N - i - 1] != 0:
            raise BalanceViolation(
                f"levels of runners {i} and {ctx.N - i} do not cancel"
            )
    return Abacus(ctx, levels)


def identity_abacus(ctx: GroupContext) -> Abacus:
    return Abacus(ctx, (0,) * (2 * ctx.n))


def from_permutation(w: MirroredPermutation) -> Abacus:
    ctx = w.ctx
    levels = [0] * (2 * ctx.n)
    for e in w.window:
        levels[runner_of(ctx, e) - 1] = level_of(ctx, e)
    return Abacus(ctx, tuple(levels))


def to_permutation(a: Abacus) -> MirroredPermutation:
    ctx = a.ctx
    if ctx.is_even_family and not is_even(a):
        raise ParityViolation("abacus is not even")
    entries = [a.levels[r - 1] * ctx.N + r for r in range(1, 2 * ctx.n + 1)]
    return normalize(MirroredPermutation(ctx, tuple(sorted(entries))))


def bead_at(a: Abacus, value: int) -> bool:
    return level_of(a.ctx, value) <= a.level(runner_of(a.ctx, value))


def lowest_bead(a: Abacus, runner: int) -> int:
    return a.level(runner) * a.ctx.N + runner


def first_gap(a: Abacus) -> int:
    """Label of the earliest gap in reading order."""
    ctx = a.ctx
    return min((a.level(r) + 1) * ctx.N + r for r in range(1, 2 * ctx.n + 1))


def last_bead(a: Abacus) -> int:
    ctx = a.ctx
    return max(a.level(r) * ctx.N + r for r in range(1, 2 * ctx.n + 1))


def entries_between(ctx: GroupContext, lo: int, hi: int):
    """Abacus entry labels v with lo < v < hi (multiples of N carry none)."""
    for v in range(lo + 1, hi):
        if v % ctx.N != 0:
            yield v


def gaps_between(a: Abacus, lo: int, hi: int) -> int:
    """Number of gaps strictly between positions lo and hi."""
    return sum(1 for v in entries_between(a.ctx, lo, hi) if not bead_at(a, v))


def active_beads(a: Abacus) -> list[int]:
    """Beads with at least one gap before them, in increasing label order."""
    fg = first_gap(a)
    out = []
    for v in range(fg + 1, last_bead(a) + 1):
        if v % a.ctx.N != 0 and bead_at(a, v):
            out.append(v)
    return out


def symmetric_gap(a: Abacus, b: int) -> int:
    if b % a.ctx.N == 0 or not bead_at(a, b) or b <= first_gap(a):
        raise NotActiveBead(f"{b} is not an active bead")
    return 2 * a.ctx.N - b


def is_even(a: Abacus) -> bool:
    """Parity of the number of gaps before position N in reading order."""
    return sum(abs(a.level(r)) for r in range(1, a.ctx.n + 1)) % 2 == 0


def apply_generator_abacus(a: Abacus, g: int) -> Abacus:
    """The generator action: each runner's lowest bead moves as a value.

    Generators permute runners wholesale (with a level shift at the affine
    end), so mapping lowest beads through the value action reproduces the
    column interchanges and shifts.
    """
    ctx = a.ctx
    levels = [0] * (2 * ctx.n)
    for r in range(1, 2 * ctx.n + 1):
        b = generator_value(ctx, g, lowest_bead(a, r))
        levels[runner_of(ctx, b) - 1] = level_of(ctx, b)
    return Abacus(ctx, tuple(levels))
