"""Command-line entry point: ``boxkite <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import atlas, render, topology, verify
from .assessors import StrutContext, sign_char, tone_row
from .cdp import SignedUnit, unit_product

DEFAULT_N = 5

# (coarse N, coarse S, fine N, fine S) pairs written by ``report``.
SIMILARITY_PAIRS = ((4, 7, 5, 15), (5, 15, 6, 15))


class ArgumentError(Exception):
    """Raised for arguments that parse but are out of range; maps to exit status 2."""


def _context(n: int, s: int | None) -> StrutContext:
    if s is None:
        raise ArgumentError("--s is required")
    try:
        return StrutContext(n, s)
    except ValueError as exc:
        raise ArgumentError(str(exc)) from None


def _palette(args) -> render.Palette | None:
    if getattr(args, "palette", None) is None:
        return None
    try:
        return render.load_palette(args.palette)
    except (OSError, ValueError) as exc:
        raise ArgumentError(f"palette: {exc}") from None


def _write(path: str | Path, data: str | bytes) -> None:
    path = Path(path)
    if isinstance(data, bytes):
        path.write_bytes(data)
    else:
        path.write_text(data)


def grid_text(table: atlas.EmanationTable) -> str:
    width = len(str(table.context.g)) + 2
    out = [" " * width + "".join(str(low).rjust(width) for low in table.lows)]
    for low, row in zip(table.lows, table.cells):
        cells = ("." if v is None else f"{v:+d}" for v in row)
        out.append(str(low).rjust(width) + "".join(c.rjust(width) for c in cells))
    return "\n".join(out)


# --- subcommands --------------------------------------------------------------


def cmd_product(args) -> int:
    try:
        a, b = SignedUnit.parse(args.i), SignedUnit.parse(args.j)
        print(unit_product(a, b, args.n))
    except ValueError as exc:
        raise ArgumentError(str(exc)) from None
    return 0


def cmd_tone_row(args) -> int:
    ctx = _context(args.n, args.s)
    print(f"{ctx}  X={ctx.x}  K={ctx.k}")
    for i, a in enumerate(tone_row(ctx)):
        print(f"{i:3d}  {a}")
    return 0


def cmd_table(args) -> int:
    ctx = _context(args.n, args.s)
    if args.cell_px < 1:
        raise ArgumentError("--cell-px must be at least 1")
    palette = _palette(args)
    table = atlas.generate_table(ctx)
    if args.csv:
        _write(args.csv, render.to_delimited(table))
    if args.ppm:
        _write(args.ppm, render.to_pixmap(table, palette, args.cell_px))
    if args.png:
        from .plotting import save_mandala

        save_mandala(table, args.png, palette, annotate=table.k <= 14)
    if not args.quiet:
        print(grid_text(table))
    print(f"{table.name}: {table.filled} filled cells, {table.filled // atlas.CELLS_PER_BOXKITE} box-kites")
    return 0


def cmd_census(args) -> int:
    if not 4 <= args.n <= 8:
        raise ArgumentError("census supports 4 <= N <= 8")
    report = atlas.census(args.n)
    if args.csv:
        _write(args.csv, report.to_csv())
    if args.png:
        from .plotting import save_census

        save_census(report, args.png)
    print("\n".join(report.lines()))
    return 0 if report.consistent else 1


def describe_boxkite(bk: topology.BoxKite) -> list[str]:
    lines = [str(bk)]
    lines.append("  struts: " + " ".join(f"{p}{q}=({bk[p].low},{bk[q].low})" for p, q in bk.struts))
    for sail in topology.classify_sails(bk):
        p, q, r = sail.letters
        signs = "".join(sign_char(s) for s in sail.edge_signs)
        lines.append(f"  {sail.kind:8s} {p}{q}{r}  lows {sail.lows}  edges {p}{q},{q}{r},{r}{p} = {signs}")
    edges = sorted(("".join(sorted(e)), s) for e, s in bk.edges.items())
    lines.append("  edges: " + " ".join(f"{e}{sign_char(s)}" for e, s in edges))
    return lines


def cmd_boxkites(args) -> int:
    ctx = _context(args.n, args.s)
    kites = topology.assemble_boxkites(ctx)
    for bk in kites:
        print("\n".join(describe_boxkite(bk)))
    print(f"{ctx}: {len(kites)} box-kites")
    return 0


def cmd_twist(args) -> int:
    ctx = _context(args.n, args.s)
    label = args.strut.upper()
    status = 0
    for bk in topology.assemble_boxkites(ctx):
        print(str(bk))
        hunt = topology.royal_hunt(bk, topology.tray_rack(bk, label))
        p, q = hunt.reversed_edge
        print(f"  tray-rack {label}: {'-'.join(hunt.letters)}  reversed edge {p}{q}")
        for mode in "HV":
            try:
                results = topology.twist_tray_rack(bk, label, mode)
            except topology.ShapeError as exc:
                print(f"  {mode}*  no twist: {exc}")
                status = 1
                continue
            for r in results:
                (a, b), (c, d) = r.source_edge, r.twisted_edge
                ok = "zero" if r.vanishes(ctx.n) else "NONZERO"
                print(f"  {mode}* {r.swap:4s}  {a} * {b}  ->  {c} * {d}  S'={r.target_strut_constant}  {ok}")
    return status


def cmd_lanyards(args) -> int:
    ctx = _context(args.n, args.s)
    total = 0
    for bk in topology.assemble_boxkites(ctx):
        found = topology.find_lanyards(bk, args.kind)
        print(f"{bk}: {len(found)} {topology.LANYARD_KINDS[args.kind]} lanyards")
        if not args.count_only:
            for lan in found:
                print(f"  {lan}")
        total += len(found)
    print(f"total: {total}")
    return 0


def cmd_verify(args) -> int:
    if args.n < 4:
        raise ArgumentError("verify needs N >= 4")
    s_values = None
    if args.s is not None:
        s_values = [_context(args.n, args.s).s]
    results = verify.run_suite(args.n, s_values)
    for r in results:
        print(r.line())
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results)} checks, {failed} failed")
    return 1 if failed else 0


def similarity(cn: int, cs: int, fn: int, fs: int) -> tuple:
    coarse = atlas.generate_table(_context(cn, cs))
    fine = atlas.generate_table(_context(fn, fs))
    try:
        return coarse, fine, atlas.self_similarity_report(coarse, fine)
    except ValueError as exc:
        raise ArgumentError(str(exc)) from None


def cmd_similarity(args) -> int:
    coarse, fine, report = similarity(args.coarse_n, args.coarse_s, args.fine_n, args.fine_s)
    if args.json:
        _write(args.json, json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
    if args.png:
        from .plotting import save_similarity

        save_similarity(coarse, fine, report, args.png, _palette(args))
    print("\n".join(report.lines()))
    return 0


def cmd_report(args) -> int:
    """Census, every table of one N, and the similarity diagnostics, all into one directory."""
    from .plotting import save_census, save_mandala, save_similarity

    if not 4 <= args.n <= 6:
        raise ArgumentError("report supports 4 <= N <= 6")
    palette = _palette(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    report = atlas.census(args.n)
    _write(out / f"census_N{args.n:03d}.csv", report.to_csv())
    save_census(report, out / f"census_N{args.n:03d}.png")
    for s in range(1, 1 << (args.n - 1)):
        ctx = StrutContext(args.n, s)
        table = atlas.generate_table(ctx)
        _write(out / render.default_filename(ctx, "csv"), render.to_delimited(table))
        _write(out / render.default_filename(ctx, "ppm"), render.to_pixmap(table, palette, args.cell_px))
        save_mandala(table, out / render.default_filename(ctx, "png"), palette, annotate=table.k <= 14)
    for cn, cs, fn, fs in SIMILARITY_PAIRS:
        coarse, fine, sim = similarity(cn, cs, fn, fs)
        stem = f"similarity_{coarse.name}_{fine.name}"
        _write(out / f"{stem}.json", json.dumps(sim.to_dict(), indent=2, sort_keys=True) + "\n")
        save_similarity(coarse, fine, sim, out / f"{stem}.png", palette)
        print(f"{stem}: match ratio {sim.match_ratio:.3f}, {len(sim.residue)} residue cells")
    print("\n".join(report.lines()))
    print(f"wrote {len(list(out.iterdir()))} files to {out}")
    return 0


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxkite", description="Cayley-Dickson zero-divisor toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def structure(name, help_text, s_required=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, default=DEFAULT_N, help=f"doubling level N (default {DEFAULT_N})")
        p.add_argument("--s", type=int, required=s_required, help="strut constant, 0 < S < 2^(N-1)")
        return p

    p = sub.add_parser("product", help="signed product of two units, e.g. 'product 7 12'")
    p.add_argument("i", help="left unit index, optionally signed")
    p.add_argument("j", help="right unit index, optionally signed")
    p.add_argument("--n", type=int, default=None, help="check both indices fit the 2^N-ions")
    p.set_defaults(func=cmd_product)

    structure("tone-row", "assessors of one strut constant in tone-row order").set_defaults(func=cmd_tone_row)

    p = structure("table", "emanation table")
    p.add_argument("--csv", help="write the delimited table here")
    p.add_argument("--ppm", help="write a binary pixmap here")
    p.add_argument("--png", help="write a matplotlib rendering here")
    p.add_argument("--cell-px", type=int, default=1, help="pixmap pixels per cell")
    p.add_argument("--palette", help="key=R,G,B colour file")
    p.add_argument("--quiet", action="store_true", help="skip the grid, print only the summary")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("census", help="box-kite census over every strut constant")
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument("--csv")
    p.add_argument("--png")
    p.set_defaults(func=cmd_census)

    structure("boxkites", "box-kites with sails, struts and edge signs").set_defaults(func=cmd_boxkites)

    p = structure("twist", "H* and V* twists of one tray-rack")
    p.add_argument("--strut", required=True, choices=["af", "be", "cd", "AF", "BE", "CD"])
    p.set_defaults(func=cmd_twist)

    p = structure("lanyards", "enumerate lanyards of one family")
    p.add_argument("--kind", required=True, choices=["sail", "trayrack", "quincunx", "chain"])
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_lanyards)

    structure("verify", "run the invariant suites", s_required=False).set_defaults(func=cmd_verify)

    p = sub.add_parser("similarity", help="compare a coarse table against a finer one")
    p.add_argument("--coarse-n", type=int, default=5)
    p.add_argument("--coarse-s", type=int, default=15)
    p.add_argument("--fine-n", type=int, default=6)
    p.add_argument("--fine-s", type=int, default=15)
    p.add_argument("--json", help="write the region report and residue here")
    p.add_argument("--png", help="write an overlay figure here")
    p.add_argument("--palette")
    p.set_defaults(func=cmd_similarity)

    p = sub.add_parser("report", help="write census, tables, figures and similarity residue to a directory")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--out", required=True)
    p.add_argument("--cell-px", type=int, default=8)
    p.add_argument("--palette")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArgumentError as exc:
        parser.error(str(exc))  # exits with status 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
