"""Command line interface: conversion between the six representations,
enumeration, rendering, and Bruhat poset export."""

from __future__ import annotations

import argparse
import json
import sys

from .abacus import (
    Abacus,
    from_permutation,
    make_abacus,
    to_permutation,
)
from .bounded import (
    abacus_from_bounded,
    bounded_partition,
    parse_bounded,
)
from .context import Family, GroupContext, make_context
from .core import CorePartition, bruhat_leq, from_abacus, make_core, to_abacus
from .errors import CoxabacusError
from .lengths import length_from_abacus
from .oracle import enumerate_quotient
from .peel import central_peel, word_to_core
from .render import (
    render_abacus_svg,
    render_abacus_text,
    render_bounded_svg,
    render_bounded_text,
    render_core_svg,
    render_core_text,
    render_peel_trace,
    render_word,
)
from .rootlattice import RootPoint, coordinates, from_coordinates
from .window import MirroredPermutation, from_base_window

REPRESENTATIONS = ("window", "levels", "core", "bounded", "word", "root")

FAMILY_ALIASES = {
    "C~/C": Family.C_OVER_C, "CC": Family.C_OVER_C,
    "B~/B": Family.B_OVER_B, "BB": Family.B_OVER_B,
    "B~/D": Family.B_OVER_D, "BD": Family.B_OVER_D,
    "D~/D": Family.D_OVER_D, "DD": Family.D_OVER_D,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _ints(text: str) -> list[int]:
    text = text.strip().strip("[]()")
    return [int(t) for t in text.replace(",", " ").split()]


def _letters(text: str) -> list[int]:
    return [int(t.lstrip("s")) for t in text.replace(",", " ").split()]


def parse_element(ctx: GroupContext, rep: str, value: str) -> MirroredPermutation:
    """Read one representation from text and route it to a window."""
    if rep == "window":
        return from_base_window(ctx, _ints(value))
    if rep == "levels":
        return to_permutation(make_abacus(ctx, _ints(value)))
    if rep == "root":
        return to_permutation(from_coordinates(RootPoint(ctx, tuple(_ints(value)))))
    if rep == "core":
        return to_permutation(to_abacus(make_core(ctx, _ints(value))))
    if rep == "bounded":
        return to_permutation(abacus_from_bounded(parse_bounded(ctx, value)))
    if rep == "word":
        return to_permutation(to_abacus(word_to_core(ctx, _letters(value))))
    raise CoxabacusError(f"unknown representation {rep!r}")


def format_element(w: MirroredPermutation, rep: str) -> str:
    a = from_permutation(w)
    if rep == "window":
        return "[" + ",".join(str(v) for v in w.window) + "]"
    if rep == "levels":
        return "(" + ",".join(str(v) for v in a.levels) + ")"
    if rep == "root":
        return "(" + ",".join(str(c) for c in coordinates(a).coords) + ")"
    if rep == "core":
        return "(" + ",".join(str(p) for p in from_abacus(a).rows) + ")"
    if rep == "bounded":
        return str(bounded_partition(from_abacus(a)))
    if rep == "word":
        return render_word(central_peel(from_abacus(a))[0])
    raise CoxabacusError(f"unknown representation {rep!r}")


def element_record(w: MirroredPermutation) -> dict:
    a = from_permutation(w)
    lam = from_abacus(a)
    beta = bounded_partition(lam)
    return {
        "family": w.ctx.family.value,
        "rank": w.ctx.n,
        "length": length_from_abacus(a),
        "window": list(w.window),
        "levels": list(a.levels),
        "root": list(coordinates(a).coords),
        "core": list(lam.rows),
        "bounded": str(beta),
        "word": central_peel(lam)[0],
    }


def _add_group_flags(p):
    p.add_argument("--family", required=True, choices=sorted(FAMILY_ALIASES))
    p.add_argument("--rank", required=True, type=int)


def _context(args) -> GroupContext:
    return make_context(FAMILY_ALIASES[args.family], args.rank)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="coxabacus")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between representations")
    _add_group_flags(p)
    p.add_argument("--from", dest="source", required=True, choices=REPRESENTATIONS)
    p.add_argument("--to", dest="target", required=True, choices=REPRESENTATIONS)
    p.add_argument("value")

    p = sub.add_parser("enumerate", help="list all elements up to a length")
    _add_group_flags(p)
    p.add_argument("--max-len", required=True, type=int)

    p = sub.add_parser("render", help="draw a diagram")
    _add_group_flags(p)
    p.add_argument("--from", dest="source", required=True, choices=REPRESENTATIONS)
    p.add_argument(
        "--render",
        dest="what",
        required=True,
        choices=("abacus", "core", "bounded", "peel-trace"),
    )
    p.add_argument("--format", default="text", choices=("text", "svg"))
    p.add_argument("value")

    p = sub.add_parser("poset", help="Bruhat order as a DOT digraph")
    _add_group_flags(p)
    p.add_argument("--max-len", required=True, type=int)
    return top


def cmd_convert(args) -> str:
    ctx = _context(args)
    w = parse_element(ctx, args.source, args.value)
    return format_element(w, args.target)


def cmd_enumerate(args) -> str:
    ctx = _context(args)
    if args.max_len < 0:
        raise CoxabacusError("--max-len must be nonnegative")
    table = enumerate_quotient(ctx, args.max_len)
    lines = []
    for layer in table.by_length:
        for w in sorted(layer, key=lambda u: u.window):
            lines.append(json.dumps(element_record(w)))
    return "\n".join(lines)


def cmd_render(args) -> str:
    ctx = _context(args)
    w = parse_element(ctx, args.source, args.value)
    a = from_permutation(w)
    if args.what == "abacus":
        return (render_abacus_text if args.format == "text" else render_abacus_svg)(a)
    lam = from_abacus(a)
    if args.what == "core":
        return (render_core_text if args.format == "text" else render_core_svg)(lam)
    if args.what == "bounded":
        beta = bounded_partition(lam)
        return (
            render_bounded_text if args.format == "text" else render_bounded_svg
        )(beta)
    return render_peel_trace(lam, args.format)


def poset_dot(ctx: GroupContext, max_len: int) -> str:
    table = enumerate_quotient(ctx, max_len)
    elements = []
    for layer in table.by_length:
        elements.extend(sorted(layer, key=lambda u: u.window))
    ids = {w.window: f"n{k}" for k, w in enumerate(elements)}
    cores = {w.window: from_abacus(from_permutation(w)) for w in elements}
    lines = ["digraph bruhat {"]
    for w in elements:
        label = str(bounded_partition(cores[w.window]))
        lines.append(f'  {ids[w.window]} [label="{label}"];')
    for x in elements:
        for w in elements:
            if (
                table.length(w) == table.length(x) + 1
                and bruhat_leq(cores[x.window], cores[w.window])
            ):
                lines.append(f"  {ids[x.window]} -> {ids[w.window]};")
    lines.append("}")
    return "\n".join(lines)


def cmd_poset(args) -> str:
    ctx = _context(args)
    if args.max_len < 0:
        raise CoxabacusError("--max-len must be nonnegative")
    return poset_dot(ctx, args.max_len)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "convert": cmd_convert,
        "enumerate": cmd_enumerate,
        "render": cmd_render,
        "poset": cmd_poset,
    }[args.command]
    try:
        out = handler(args)
    except CoxabacusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
