"""Command line surface: sampling, combing, verification, determinants,
enumeration, tiling conversion and SVG rendering."""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter

from .combing import PreconditionViolation, comb, comb_column, uncomb
from .delannoy import delannoy_matrix, det_exact, verify_reduction
from .enumeration import (
    CapExceeded,
    column_counts,
    diagonal_step_count,
    enumerate_disjoint,
    intercolumn_counts,
    row_counts,
    verify_bijection,
)
from .families import (
    BitTriangle,
    InvalidFamily,
    MalformedPath,
    ParseError,
    PathFamily,
    family_from_bits,
    is_disjoint,
)
from .rng import random_triangle
from .svg import render_dual, render_family, render_overlay, render_tiling
from .tilings import Convention, DominoTiling, NotATiling, family_to_tiling, tiling_to_family

STATISTICS = {
    "columns": column_counts,
    "intercolumns": intercolumn_counts,
    "rows": row_counts,
    "diagonals": diagonal_step_count,
}


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def cmd_sample(n: int, seed: int, out_family: str | None = None,
               out_triangle: str | None = None, svg_path: str | None = None) -> int:
    t = random_triangle(n, seed)
    f = comb(t)
    if not is_disjoint(f):
        raise AssertionError("combing produced an intersecting family")
    if out_triangle:
        _emit(t.to_text(), out_triangle)
    if out_family:
        _emit(f.to_text(), out_family)
    if not out_triangle and not out_family:
        sys.stdout.write(t.to_text())
        sys.stdout.write(f.to_text())
    if svg_path:
        _emit(render_family(f), svg_path)
    return 0


def cmd_comb(input_path: str, output: str | None, stages: str | None = None) -> int:
    t = BitTriangle.from_text(_read(input_path))
    if stages:
        os.makedirs(stages, exist_ok=True)
        f = family_from_bits(t)
        for k in range(t.n - 1, -1, -1):
            f = comb_column(f, k)
            _emit(render_family(f), os.path.join(stages, f"stage-{k:03d}.svg"))
        _emit(f.to_text(), output)
    else:
        _emit(comb(t).to_text(), output)
    return 0


def cmd_uncomb(input_path: str, output: str | None) -> int:
    f = PathFamily.from_text(_read(input_path))
    _emit(uncomb(f).to_text(), output)
    return 0


def cmd_det(n: int) -> int:
    value = det_exact(delannoy_matrix(n))
    exponent = n * (n - 1) // 2
    print(f"{value} = 2^{exponent}")
    if value != 1 << exponent:
        print("determinant does not match the expected power of 2", file=sys.stderr)
        return 1
    if not all(verify_reduction(m) for m in range(1, n + 1)):
        print("unitriangular reduction identity failed", file=sys.stderr)
        return 1
    return 0


def cmd_enumerate(n: int, cap: int, stat: str | None) -> int:
    families = enumerate_disjoint(n, cap)
    print(f"{len(families)} disjoint families of order {n}")
    if stat:
        hist = Counter(STATISTICS[stat](f) for f in families)

        def key_text(k):
            return " ".join(str(x) for x in k) if isinstance(k, tuple) else str(k)

        for key in sorted(hist):
            print(f"{key_text(key)} : {hist[key]}")
    return 0


def cmd_verify(n: int, cap: int) -> int:
    report = verify_bijection(n, cap)
    print(f"triangles combed: {report.triangles}")
    if report.ok:
        print(f"image matched {report.disjoint_families}/{report.disjoint_families} "
              f"disjoint families")
    else:
        print(f"failures: {len(report.failures)}")
        for failure in report.failures[:20]:
            print(f"  {failure}")
    print("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


def cmd_tile(input_path: str, direction: str, output: str | None) -> int:
    text = _read(input_path)
    if direction == "to-tiling":
        _emit(family_to_tiling(PathFamily.from_text(text)).to_text(), output)
    else:
        _emit(tiling_to_family(DominoTiling.from_text(text)).to_text(), output)
    return 0


def _detect_kind(text: str) -> str:
    for line in text.splitlines():
        fields = line.split()
        if not fields:
            continue
        if len(fields) == 1:
            return "family"
        if len(fields) == 4:
            return "tiling"
        raise ParseError(f"cannot tell input kind from line {line!r}", line=1)
    return "tiling"  # empty file: the order-0 tiling


def cmd_render(input_path: str, style: str, convention: int, output: str | None) -> int:
    text = _read(input_path)
    kind = _detect_kind(text)
    if style in ("paths", "dual"):
        if kind != "family":
            raise ParseError(f"style {style!r} needs a family file")
        f = PathFamily.from_text(text)
        doc = render_family(f) if style == "paths" else render_dual(f)
    else:
        if kind != "tiling":
            raise ParseError(f"style {style!r} needs a tiling file")
        t = DominoTiling.from_text(text)
        doc = render_tiling(t) if style == "tiling" else render_overlay(
            t, Convention(convention))
    _emit(doc, output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pathcomb",
        description="Comb free-bit path families into disjoint ones, convert "
                    "them to Aztec diamond tilings, and verify the counting "
                    "identities behind the construction.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sample", help="comb a random triangle deterministically")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out-family")
    sp.add_argument("--out-triangle")
    sp.add_argument("--svg")

    sp = sub.add_parser("comb", help="triangle file to disjoint family file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--output")
    sp.add_argument("--stages", help="directory for one SVG per column stage")

    sp = sub.add_parser("uncomb", help="disjoint family file to triangle file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--output")

    sp = sub.add_parser("det", help="exact determinant of the Delannoy matrix")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("enumerate", help="enumerate disjoint families")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cap", type=int, default=5)
    sp.add_argument("--stat", choices=sorted(STATISTICS))

    sp = sub.add_parser("verify", help="exhaustively verify the bijection")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cap", type=int, default=5)

    sp = sub.add_parser("tile", help="convert between family and tiling files")
    sp.add_argument("--input", required=True)
    sp.add_argument("--direction", choices=("to-tiling", "to-family"), required=True)
    sp.add_argument("--output")

    sp = sub.add_parser("render", help="render a family or tiling file as SVG")
    sp.add_argument("--input", required=True)
    sp.add_argument("--style", choices=("paths", "tiling", "overlay", "dual"),
                    default="paths")
    sp.add_argument("--convention", type=int, choices=(0, 1, 2, 3), default=0)
    sp.add_argument("--output")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sample":
            return cmd_sample(args.n, args.seed, args.out_family,
                              args.out_triangle, args.svg)
        if args.command == "comb":
            return cmd_comb(args.input, args.output, args.stages)
        if args.command == "uncomb":
            return cmd_uncomb(args.input, args.output)
        if args.command == "det":
            return cmd_det(args.n)
        if args.command == "enumerate":
            return cmd_enumerate(args.n, args.cap, args.stat)
        if args.command == "verify":
            return cmd_verify(args.n, args.cap)
        if args.command == "tile":
            return cmd_tile(args.input, args.direction, args.output)
        if args.command == "render":
            return cmd_render(args.input, args.style, args.convention, args.output)
        raise AssertionError(f"unhandled command {args.command}")
    except (ParseError, InvalidFamily, MalformedPath, NotATiling,
            PreconditionViolation, CapExceeded, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
