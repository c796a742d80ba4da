"""Command-line entry point.

Exit codes: 0 found/verified, 1 absent/unsatisfied, 2 usage or input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gridio
from .colorings import (StoredGrid, make_column_exception, make_diagonal_d3, make_parity,
                        make_rainbow_feasible_random, make_striped, render)
from .core import RainbowMode
from .errors import BudgetExceeded, InvalidParameters, LatticeError
from .search import (Kind, find_h_quads, find_mono_rects, find_rainbow_triangles,
                     search_rainbow_ap3)
from .verify import (af_brute_force, canonical_witness_search, prop_double_triangles,
                     prop_para_or_trapezium, prop_triangle_between_lines, verify_dichotomy,
                     vdw_number)
from .verify.af import DEFAULT_MAX_N

EXIT_OK, EXIT_ABSENT, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

RULES = ("column-exception", "striped", "d3", "parity", "rf-random", "file")
KINDS = {
    "mono-rect": Kind.MONO_RECT,
    "rainbow-triangle": Kind.RAINBOW_TRIANGLE,
    "rainbow-ap3": Kind.RAINBOW_AP3,
    "mono-parallelogram": Kind.MONO_PARALLELOGRAM_H,
    "rainbow-trapezoid": Kind.RAINBOW_TRAPEZOID_H,
}


def _int_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return a, b


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return _int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N, N1,N2,... or LO..HI, got {text!r}")


def _add_source_args(p: argparse.ArgumentParser, default_size: int | None = 30):
    g = p.add_argument_group("coloring source")
    g.add_argument("--input", help="grid file")
    g.add_argument("--rule", choices=RULES)
    g.add_argument("--t", type=int, help="column-exception spacing")
    g.add_argument("--period-colors", type=_int_list, help="striped line colors, e.g. 0,1,2")
    g.add_argument("--r", type=int, help="palette size")
    g.add_argument("--n", type=int, help="segment length for rf-random")
    g.add_argument("--seed", type=int, help="rf-random seed (64-bit unsigned)")
    g.add_argument("--periodic", action="store_true",
                   help="with --rule file: tile the grid instead of erroring out of bounds")
    g.add_argument("--origin", type=_int_pair, default=(0, 0), help="X,Y")
    g.add_argument("--width", type=int, default=None)
    g.add_argument("--height", type=int, default=None)
    p.set_defaults(default_size=default_size)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--jobs", type=int, default=1, help="worker processes (never changes output)")


def build_rule(args):
    rule = args.rule
    if rule is None:
        if args.input:
            rule = "file"
        else:
            raise InvalidParameters("give --input or --rule")
    if rule == "column-exception":
        if args.t is None or args.r is None:
            raise InvalidParameters("column-exception needs --t and --r")
        return make_column_exception(args.t, args.r)
    if rule == "striped":
        return make_striped(args.period_colors or [0, 1, 2], args.r)
    if rule == "d3":
        return make_diagonal_d3()
    if rule == "parity":
        if args.r is None:
            raise InvalidParameters("parity needs --r")
        return make_parity(args.r)
    if rule == "rf-random":
        if args.n is None or args.seed is None:
            raise InvalidParameters("rf-random needs --n and an explicit --seed")
        return make_rainbow_feasible_random(args.n, args.seed)
    if not args.input:
        raise InvalidParameters("--rule file needs --input")
    grid = gridio.read_grid(args.input, args.origin)
    return StoredGrid(grid, "periodic" if args.periodic else "error")


def load_window(args):
    """The window a subcommand works on: a grid file as-is, or a rendered rule."""
    if args.rule is None and args.input:
        if args.width is None and args.height is None:
            return gridio.read_grid(args.input, args.origin)
    rule = build_rule(args)
    if isinstance(rule, StoredGrid):
        width = args.width or rule.window.width
        height = args.height or rule.window.height
    else:
        width = args.width or args.default_size
        height = args.height or args.default_size
    return render(rule, args.origin, width, height)


def _write_json(path, obj):
    if path:
        Path(path).write_text(json.dumps(obj, indent=2) + "\n")


def _doubled_target(args) -> int:
    if (args.area is None) == (args.doubled_area is None):
        raise InvalidParameters("give exactly one of --area and --doubled-area")
    if args.area is not None:
        return 2 * args.area
    return args.doubled_area


def _mode(args):
    return None if args.mode is None else RainbowMode(args.mode)


# -- subcommands --------------------------------------------------------------

def cmd_generate(args):
    w = load_window(args)
    if args.out:
        gridio.write_grid(w, args.out)
    if args.ppm:
        gridio.write_ppm(w, args.ppm)
    if not (args.out or args.ppm):
        sys.stdout.write(gridio.format_grid(w))
    else:
        print(f"generated {w.width}x{w.height} window, palette {w.palette}")
    return EXIT_OK


def cmd_search(args):
    w = load_window(args)
    kind = KINDS[args.kind]
    if kind is Kind.RAINBOW_AP3:
        rows = None if args.row is None else [args.row]
        report = search_rainbow_ap3(w, rows, args.span, args.limit)
    else:
        target = _doubled_target(args)
        if kind is Kind.MONO_RECT:
            if target % 2:
                raise InvalidParameters("a rectangle's doubled area is even")
            report = find_mono_rects(w, target // 2, args.limit, args.jobs)
        elif kind is Kind.RAINBOW_TRIANGLE:
            report = find_rainbow_triangles(w, target, _mode(args) or RainbowMode.STRICT,
                                            args.limit, args.sweep, args.jobs)
        else:
            report = find_h_quads(w, target, kind, _mode(args), args.limit, args.jobs)
    _write_json(args.json, report.to_dict(timing=args.timing))
    print(f"{report.query}: {report.total_count} found "
          f"({'exhaustive' if report.exhaustive else 'partial sweep'}, {report.elapsed_ms} ms)")
    for c in report.witnesses:
        print("  " + " ".join(f"({v.x},{v.y})" for v in c.vertices) + f" colors={list(c.colors)}")
    return EXIT_OK if report.found else EXIT_ABSENT


def cmd_verify_dichotomy(args):
    w = load_window(args)
    rep = verify_dichotomy(w, args.areas, args.jobs)
    _write_json(args.json, rep.to_dict())
    tri = rep.found_rainbow_triangle
    print(f"rainbow triangle (doubled area 1): {'none' if tri is None else list(tri.vertices)}")
    for a, c in sorted(rep.mono_rect_areas_found.items()):
        print(f"mono rectangle of area {a}: {'none' if c is None else list(c.vertices)}")
    print(f"satisfied: {rep.satisfied} ({rep.caveat})")
    return EXIT_OK if rep.satisfied else EXIT_ABSENT


def cmd_af(args):
    results = [af_brute_force(n, args.max_n, args.jobs) for n in args.n]
    _write_json(args.json, [r.to_dict() for r in results])
    for r in results:
        print(f"N={r.n}: formula {r.formula_threshold}, brute force {r.brute_threshold}, "
              f"{'agree' if r.agree else 'DISAGREE'}; extremal {''.join(map(str, r.extremal_witness))}")
    return EXIT_OK if all(r.agree for r in results) else EXIT_ABSENT


def cmd_vdw(args):
    value = vdw_number(args.k, args.r, args.cap)
    _write_json(args.json, {"k": args.k, "r": args.r, "cap": args.cap, "value": value})
    print("absent" if value is None else value)
    return EXIT_ABSENT if value is None else EXIT_OK


def cmd_witness(args):
    if args.n is None:
        raise InvalidParameters("witness needs --n")
    rule = build_rule(args)
    wit = canonical_witness_search(rule, args.n, args.segments, args.rows, args.jobs)
    _write_json(args.json, None if wit is None else wit.to_dict())
    if wit is None:
        print("no witness within the budgets")
        return EXIT_ABSENT
    print(f"label {wit.triple.to_dict()} on segments {wit.segments} "
          f"(rows {wit.row_u}, {wit.row_u2}); z={tuple(wit.z)}")
    print(f"{wit.outcome.kind.value}: {[tuple(v) for v in wit.outcome.vertices]} "
          f"doubled area {wit.doubled_area}")
    return EXIT_OK


def cmd_prop(args):
    w = load_window(args)
    if args.which == "triangle1":
        res = prop_triangle_between_lines(w)
    else:
        if args.a is None:
            raise InvalidParameters(f"--which {args.which} needs --a")
        fn = prop_double_triangles if args.which == "double-triangles" else prop_para_or_trapezium
        res = fn(w, args.a)
    _write_json(args.json, res.to_dict())
    if not res.found:
        print(f"absent: {res.reason}")
        return EXIT_ABSENT
    for c in res.witnesses:
        print(f"{c.kind.value}: {[tuple(v) for v in c.vertices]} colors={list(c.colors)} "
              f"doubled area {c.doubled_area}")
    return EXIT_OK


def cmd_export(args):
    w = load_window(args)
    gridio.write_ppm(w, args.ppm)
    print(f"wrote {args.ppm} ({w.width}x{w.height})")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gallai-lattice",
                                     description="Lattice coloring pattern search and verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="render a coloring rule into a grid file")
    _add_source_args(p)
    _add_common(p)
    p.add_argument("--out")
    p.add_argument("--ppm")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", help="find configurations of a given area")
    _add_source_args(p)
    _add_common(p)
    p.add_argument("--kind", choices=list(KINDS), required=True)
    p.add_argument("--area", type=int)
    p.add_argument("--doubled-area", type=int)
    p.add_argument("--mode", choices=[m.value for m in RainbowMode])
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--sweep", choices=("auto", "full", "fast"), default="auto")
    p.add_argument("--row", type=int, help="rainbow-ap3: only this line")
    p.add_argument("--span", type=_int_pair, help="rainbow-ap3: A,B half-open x range")
    p.add_argument("--json")
    p.add_argument("--timing", action="store_true",
                   help="record elapsed_ms in the JSON report (otherwise written as 0)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-dichotomy", help="rainbow triangle or mono rectangles")
    _add_source_args(p)
    _add_common(p)
    p.add_argument("--areas", type=_int_list, required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify_dichotomy)

    p = sub.add_parser("af", help="rainbow 3-AP class-size threshold by brute force")
    _add_common(p)
    p.add_argument("--n", type=_n_range, required=True, help="N, N1,N2,... or LO..HI")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--json")
    p.set_defaults(func=cmd_af)

    p = sub.add_parser("vdw", help="small van der Waerden number")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_vdw)

    p = sub.add_parser("witness", help="parallelogram-or-trapezoid witness search")
    _add_source_args(p, default_size=None)
    _add_common(p)
    p.add_argument("--segments", type=int, default=40)
    p.add_argument("--rows", type=int, default=40)
    p.add_argument("--json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("prop", help="constructive triangle / quadrilateral searches")
    _add_source_args(p)
    _add_common(p)
    p.add_argument("--which", choices=("triangle1", "double-triangles", "para-trapezium"),
                   required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--json")
    p.set_defaults(func=cmd_prop)

    p = sub.add_parser("export", help="write a grid as a PPM image")
    _add_source_args(p)
    _add_common(p)
    p.add_argument("--ppm", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
