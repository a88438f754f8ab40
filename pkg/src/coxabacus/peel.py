"""Central peeling and the bounded diagram.

Peeling repeatedly removes the component of the last box of row d, where d
counts the boxes on the family's reference diagonal; the recorded boxes
form the upper diagram and the letters form the canonical reduced word
(leftmost letter applied last).
"""

from __future__ import annotations

from .context import GroupContext
from .core import (
    CorePartition,
    apply_generator_core,
    diagonal_boxes,
    hook_length,
    residue_set,
    row_len,
)
from .errors import StuckPeel


def reference_diagonal(ctx: GroupContext) -> int:
    return 1 if ctx.fork_at_zero else 0


def _peel_letter(lam: CorePartition, i: int, j: int) -> int:
    rs = residue_set(lam, i, j)
    if not rs:
        raise StuckPeel(f"box ({i},{j}) has undetermined residue")
    if len(rs) == 1:
        return next(iter(rs))
    # a doubly removable box: prefer the fork-side letter
    return max(rs) if lam.ctx.n in rs else min(rs)


def _recorded_box(ctx: GroupContext, letter: int, d: int, removed_cols) -> tuple:
    if len(removed_cols) == 1:
        return (d, removed_cols[0])
    skip = set()
    if letter == ctx.n and ctx.fork_at_n:
        skip = {d + ctx.n}
    elif letter == 0 and ctx.fork_at_zero:
        skip = {d, d + 2 * ctx.n}
    keep = [c for c in removed_cols if c not in skip]
    return (d, keep[0] if keep else removed_cols[0])


def central_peel(lam: CorePartition) -> tuple[list[int], list[tuple]]:
    """Returns (letters, boxes); letters[k] was applied at step k, so the
    group element is the product s_letters[0] ... s_letters[-1]."""
    ctx = lam.ctx
    ref = reference_diagonal(ctx)
    letters: list[int] = []
    boxes: list[tuple] = []
    cur = lam
    while cur.rows:
        d = diagonal_boxes(cur, ref)
        if d == 0 or d > len(cur.rows):
            raise StuckPeel("no box on the reference diagonal")
        j = cur.rows[d - 1]
        r = _peel_letter(cur, d, j)
        nxt = apply_generator_core(cur, r)
        if sum(nxt.rows) >= sum(cur.rows):
            raise StuckPeel(f"letter {r} does not shrink the partition")
        removed = list(range(row_len(nxt.rows, d) + 1, j + 1))
        letters.append(r)
        boxes.append(_recorded_box(ctx, r, d, removed))
        cur = nxt
    return letters, boxes


def word_to_core(ctx: GroupContext, letters) -> CorePartition:
    """Rebuild the core from a word by applying letters right to left."""
    cur = CorePartition(ctx, ())
    for r in reversed(list(letters)):
        cur = apply_generator_core(cur, r)
    return cur


def bounded_diagram(lam: CorePartition) -> set[tuple]:
    """Left-justified row segments of skew boxes, truncated at the forks:
    equal to the upper diagram from central peeling."""
    ctx = lam.ctx
    p = 2 * ctx.n
    boxes = set()
    for i in range(1, len(lam.rows) + 1):
        if lam.rows[i - 1] < i:
            continue
        skew = sum(
            1 for j in range(1, lam.rows[i - 1] + 1) if hook_length(lam, i, j) < p
        )
        # diagonal box plus one box per skew box, clipped to the row
        for j in range(i, min(i + skew, lam.rows[i - 1]) + 1):
            boxes.add((i, j))
    if ctx.fork_at_zero:
        boxes = {(i, j) for (i, j) in boxes if j != i}
    if ctx.fork_at_n:
        boxes = {(i, j) for (i, j) in boxes if j != i + ctx.n}
    return boxes
