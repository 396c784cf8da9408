"""Command line interface: classify, types, tile, flips, enumerate, verify."""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Sequence

from .cuttypes import CutType, valid_types
from .errors import LozengeError, ParseError
from .formats import decode_tiling, encode_tiling
from .grouprep import (
    admits_cut_matrix_form,
    has_trivial_character,
    is_klein_four,
    parse_group,
)
from .lattice import PeriodicityMatrix, canonicalize
from .mutation import flip_class, flip_connect
from .oracle import all_canonical_matrices, verify_classification, verify_mutation_theorem, verify_type_theorem
from .render import render_ascii, render_simplex_svg, render_svg
from .tiling import air_tiling, canonical_tiling

ADMITS = "admits a higher preprojective cut"
DENIES_KLEIN = "no higher preprojective cut (Klein four-group)"
DENIES_CHARACTER = "no higher preprojective cut (a coordinate character is trivial)"
DENIES_TYPE = "no higher preprojective cut (no all-positive type)"


def _matrix_text(m: PeriodicityMatrix) -> str:
    return f"{m.a1} {m.b1} / {m.a2} {m.b2}"


def _parse_matrix(text: str) -> PeriodicityMatrix:
    rows = text.split("/")
    if len(rows) != 2:
        raise ParseError(f"expected 'a1 b1 / a2 b2', got {text!r}")
    entries = []
    for row in rows:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'a1 b1 / a2 b2', got {text!r}")
        try:
            entries.append([int(p) for p in parts])
        except ValueError:
            raise ParseError(f"matrix entries must be integers, got {text!r}") from None
    return canonicalize(entries)


def _parse_type(text: str, n: int) -> CutType:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"expected 'g1,g2,g3', got {text!r}")
    try:
        g1, g2, g3 = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"type entries must be integers, got {text!r}") from None
    return CutType(g1, g2, g3, n)


def _cmd_classify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.group is not None:
        group = parse_group(args.group)
        matrix = group.matrix
        print(f"B = {_matrix_text(matrix)}")
        print(f"|G| = {group.order}")
        if is_klein_four(group):
            print(DENIES_KLEIN)
            return 0
        if has_trivial_character(group):
            print(DENIES_CHARACTER)
            return 0
        print(ADMITS)
        return 0
    matrix = _parse_matrix(args.matrix)
    print(f"B = {_matrix_text(matrix)}")
    print(f"|G| = {matrix.n}")
    print(ADMITS if admits_cut_matrix_form(matrix) else DENIES_TYPE)
    return 0


def _cmd_types(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    matrix = _parse_matrix(args.matrix)
    for t in valid_types(matrix, include_boundary=args.all):
        print(f"{t}  {'positive' if t.positive else 'boundary'}")
    if args.svg is not None:
        with open(args.svg, "w") as handle:
            handle.write(render_simplex_svg(matrix))
        print(f"wrote {args.svg}")
    return 0


def _cmd_tile(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.air is not None:
        if args.matrix is not None or args.type is not None:
            parser.error("--air cannot be combined with --matrix/--type")
        parts = args.air.split(",")
        if len(parts) != 4:
            raise ParseError(f"expected 'n,e1,e2,e3', got {args.air!r}")
        try:
            n, e1, e2, e3 = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"exponents must be integers, got {args.air!r}") from None
        tiling = air_tiling(n, (e1, e2, e3))
    else:
        if args.matrix is None or args.type is None:
            parser.error("either --matrix and --type, or --air, is required")
        matrix = _parse_matrix(args.matrix)
        tiling = canonical_tiling(matrix, _parse_type(args.type, matrix.n))
    if args.out is None:
        sys.stdout.write(encode_tiling(tiling))
        return 0
    ext = os.path.splitext(args.out)[1].lower()
    if ext == ".json":
        payload = encode_tiling(tiling)
    elif ext == ".svg":
        payload = render_svg(tiling)
    elif ext == ".txt":
        payload = render_ascii(tiling)
    else:
        parser.error(f"unsupported output extension {ext!r} (use .json, .svg or .txt)")
    with open(args.out, "w") as handle:
        handle.write(payload)
    print(f"wrote {args.out}")
    return 0


def _cmd_flips(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    path_a, path_b = args.connect
    with open(path_a) as handle:
        start = decode_tiling(handle.read())
    with open(path_b) as handle:
        goal = decode_tiling(handle.read())
    sequence = flip_connect(start, goal)
    print(f"sequence length: {len(sequence.steps)}")
    for k, coset in enumerate(sequence.steps):
        print(f"{k}: flip at coset {coset} = {start.quotient.reps[coset]}")
    assert sequence.replay().letters == goal.letters
    print("replay ok")
    return 0


def _cmd_enumerate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    matrix = _parse_matrix(args.matrix)
    tiling = canonical_tiling(matrix, _parse_type(args.type, matrix.n))
    tilings = flip_class(tiling)
    print(f"flip class size: {len(tilings)}")
    if args.list is not None:
        os.makedirs(args.list, exist_ok=True)
        for k, t in enumerate(tilings):
            path = os.path.join(args.list, f"tiling_{k:04d}.json")
            with open(path, "w") as handle:
                handle.write(encode_tiling(t))
        print(f"wrote {len(tilings)} files to {args.list}")
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    ok = True
    for matrix in all_canonical_matrices(args.max_n):
        for report in (
            verify_type_theorem(matrix, max_n=args.max_n),
            verify_mutation_theorem(matrix, max_n=args.max_n),
        ):
            ok = ok and report.ok
            print(report)
    report = verify_classification(args.max_order)
    ok = ok and report.ok
    print(report)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lozenge",
        description="Periodic lozenge tilings: existence, construction and flips.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide whether a cut of all-positive type exists")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--group", help="generators, e.g. '1/2(1,1,0); 1/6(1,4,1)'")
    source.add_argument("--matrix", help="periodicity matrix 'a1 b1 / a2 b2'")
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("types", help="list the valid letter-count triples")
    p.add_argument("--matrix", required=True, help="periodicity matrix 'a1 b1 / a2 b2'")
    p.add_argument("--all", action="store_true", help="include boundary types")
    p.add_argument("--svg", help="also write a simplex diagram to this file")
    p.set_defaults(run=_cmd_types)

    p = sub.add_parser("tile", help="construct a periodic tiling")
    p.add_argument("--matrix", help="periodicity matrix 'a1 b1 / a2 b2'")
    p.add_argument("--type", help="letter counts 'g1,g2,g3'")
    p.add_argument("--air", help="build from exponents 'n,e1,e2,e3' instead")
    p.add_argument("--out", help="output file; format chosen by .json/.svg/.txt extension")
    p.set_defaults(run=_cmd_tile)

    p = sub.add_parser("flips", help="connect two tilings by single flips")
    p.add_argument("--connect", nargs=2, metavar=("A.json", "B.json"), required=True)
    p.set_defaults(run=_cmd_flips)

    p = sub.add_parser("enumerate", help="walk the whole flip class of a type")
    p.add_argument("--matrix", required=True, help="periodicity matrix 'a1 b1 / a2 b2'")
    p.add_argument("--type", required=True, help="letter counts 'g1,g2,g3'")
    p.add_argument("--list", help="dump every tiling as JSON into this directory")
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("verify", help="re-check the structure theorems on small cases")
    p.add_argument("--max-n", type=int, default=8, help="largest quotient order to sweep")
    p.add_argument("--max-order", type=int, default=12, help="largest group order to classify")
    p.set_defaults(run=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except LozengeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
