"""Brute-force oracles: breadth-first enumeration of the quotient by the
left generator action, and Bruhat order via the lifting property.  These
deliberately avoid the closed formulas so they can check them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .context import GroupContext
from .errors import NotEnumerated
from .window import MirroredPermutation, apply_generator_left, identity, normalize


@dataclass
class QuotientTable:
    ctx: GroupContext
    max_len: int
    lengths: dict[tuple, int]
    by_length: list[list[MirroredPermutation]]
    _bruhat_memo: dict = field(default_factory=dict, repr=False)

    def length(self, w: MirroredPermutation) -> int:
        try:
            return self.lengths[w.window]
        except KeyError:
            raise NotEnumerated(f"{w.window} beyond max_len={self.max_len}")

    def elements(self):
        for layer in self.by_length:
            yield from layer


def enumerate_quotient(ctx: GroupContext, max_len: int) -> QuotientTable:
    e = identity(ctx)
    lengths = {e.window: 0}
    by_length = [[e]]
    frontier = [e]
    for dist in range(1, max_len + 1):
        layer = []
        for w in frontier:
            for g in ctx.generators():
                u = normalize(apply_generator_left(w, g))
                if u.window not in lengths:
                    lengths[u.window] = dist
                    layer.append(u)
        by_length.append(layer)
        frontier = layer
    return QuotientTable(ctx, max_len, lengths, by_length)


def oracle_descents(table: QuotientTable, w: MirroredPermutation) -> set[int]:
    lw = table.length(w)
    out = set()
    for g in table.ctx.generators():
        u = normalize(apply_generator_left(w, g))
        if u.window != w.window and table.lengths.get(u.window, lw + 1) < lw:
            out.add(g)
    return out


def bruhat_leq_lifting(
    table: QuotientTable, x: MirroredPermutation, w: MirroredPermutation
) -> bool:
    """x <= w in Bruhat order on the quotient, by repeated lifting."""
    key = (x.window, w.window)
    memo = table._bruhat_memo
    if key in memo:
        return memo[key]
    if table.length(x) > table.length(w):
        result = False
    elif table.length(w) == 0:
        result = table.length(x) == 0
    else:
        g = min(oracle_descents(table, w))
        wg = normalize(apply_generator_left(w, g))
        xg = normalize(apply_generator_left(x, g))
        lxg = table.lengths.get(xg.window)
        if xg.window != x.window and lxg is not None and lxg < table.length(x):
            x = xg
        result = bruhat_leq_lifting(table, x, wg)
    memo[key] = result
    return result
