#!/usr/bin/env python3
"""Print every element of a quotient up to a given length, one line per
element, with all six representations side by side."""

import argparse

from coxabacus import (
    bounded_partition,
    central_peel,
    coordinates,
    enumerate_quotient,
    from_abacus,
    from_permutation,
    make_context,
)
from coxabacus.cli import FAMILY_ALIASES
from coxabacus.render import render_word


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="C~/C", choices=sorted(FAMILY_ALIASES))
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=6)
    args = ap.parse_args()

    ctx = make_context(FAMILY_ALIASES[args.family], args.rank)
    table = enumerate_quotient(ctx, args.max_len)
    print(f"# {ctx.family.value} rank {ctx.n}, lengths 0..{args.max_len}")
    for w in table.elements():
        a = from_permutation(w)
        lam = from_abacus(a)
        beta = bounded_partition(lam)
        word = render_word(central_peel(lam)[0]) or "e"
        print(
            f"l={table.length(w):2d}  window={list(w.window)}  "
            f"levels={list(a.levels)}  root={list(coordinates(a).coords)}  "
            f"core={list(lam.rows)}  bounded={beta}  word={word}"
        )


if __name__ == "__main__":
    main()
