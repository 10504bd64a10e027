"""Command-line interface.

Subcommands:
  generate    draw a random scenario and write/print the disk file
  build       construct the disk-nerve complex, report homology, write outputs
  rips        same as build but with the clique (pairwise-only) complex
  render      draw a disk set and its complex to an SVG
  bench       time construction over a density/dmax sweep, emit CSV
  crosscheck  compare a built complex against the brute-force oracle

Exit code 0 on success; 1 when crosscheck finds disagreements; 2 on bad
input or usage.
"""

from __future__ import annotations

import argparse
import sys

from .bench import benchmark, fit_scaling, rows_to_csv
from .complexes import CECH, RIPS, build_cech
from .geometry import Tolerance
from .io import DiskFileError, disks_to_csv, read_complex, read_disks, write_disks
from .oracle import cross_check
from .pipeline import run
from .render import render_svg
from .scenario import ScenarioConfig, generate_scenario


def _dmax(value: str) -> int | None:
    """--dmax accepts an integer cap or 'full' for an uncapped build."""
    if value.lower() in ("full", "none"):
        return None
    return int(value)


def _dmax_list(value: str) -> list[int | None]:
    return [_dmax(part) for part in value.split(",") if part.strip()]


def _float_list(value: str) -> list[float]:
    return [float(part) for part in value.split(",") if part.strip()]


def _add_scenario_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--density", type=float, required=True,
                   help="expected disks per unit area")
    p.add_argument("--width", type=float, default=6.0)
    p.add_argument("--height", type=float, default=6.0)
    p.add_argument("--rmin", type=float, default=0.5, help="minimum radius")
    p.add_argument("--rmax", type=float, default=1.0, help="maximum radius")
    p.add_argument("--seed", type=int, default=0)


def _add_build_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="disk file (CSV or .json)")
    p.add_argument("--dmax", type=_dmax, default=2,
                   help="dimension cap, or 'full' for uncapped")
    p.add_argument("--eps", type=float, default=1e-9,
                   help="closed-disk comparison tolerance")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out-complex", help="write the complex as JSON")
    p.add_argument("--out-report", help="write the homology report as JSON")
    p.add_argument("--out-svg", help="write an SVG figure")
    p.add_argument("--out-fig", help="write a matplotlib figure (png/pdf)")


def _cmd_generate(args: argparse.Namespace) -> int:
    cfg = ScenarioConfig(
        density=args.density,
        width=args.width,
        height=args.height,
        radius_min=args.rmin,
        radius_max=args.rmax,
        seed=args.seed,
    )
    ds = generate_scenario(cfg)
    if args.out:
        write_disks(ds, args.out)
        print(f"generated {len(ds)} disks -> {args.out}")
    else:
        sys.stdout.write(disks_to_csv(ds))
    return 0


def _run_and_report(args: argparse.Namespace, kind: str) -> int:
    ds = read_disks(args.input)
    report = run(
        ds,
        kind=kind,
        dmax=args.dmax,
        tol=Tolerance(eps=args.eps),
        threads=args.threads,
        out_complex=args.out_complex,
        out_report=args.out_report,
        out_svg=args.out_svg,
        out_fig=args.out_fig,
        config={"input": args.input},
    )
    dmax = "full" if report.dmax is None else report.dmax
    print(f"{report.kind} complex of {report.n_disks} disks (dmax={dmax}, "
          f"eps={report.eps}) built in {report.build_ms:.2f} ms")
    print("level sizes: " + " ".join(
        f"|S{k}|={size}" for k, size in enumerate(report.level_sizes)))
    print("betti: " + " ".join(
        f"b{k}={b}" for k, b in enumerate(report.betti)))
    indices = " ".join(
        f"{v}:{idx}{'+' if capped else ''}"
        for v, (idx, capped) in enumerate(
            zip(report.vertex_indices, report.vertex_index_capped))
    )
    print(f"vertex indices (+ marks 'at least'): {indices}")
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    return _run_and_report(args, RIPS if args.rips else CECH)


def _cmd_rips(args: argparse.Namespace) -> int:
    return _run_and_report(args, RIPS)


def _cmd_render(args: argparse.Namespace) -> int:
    ds = read_disks(args.input)
    if args.complex:
        cx = read_complex(args.complex)
    else:
        cx = build_cech(ds, dmax=args.dmax, tol=Tolerance(eps=args.eps),
                        threads=args.threads)
    render_svg(ds, cx, args.out_svg)
    print(f"rendered {len(ds)} disks -> {args.out_svg}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    rows = benchmark(
        densities=args.densities,
        dmaxes=args.dmax_list,
        repeats=args.repeats,
        seed=args.seed,
        width=args.width,
        height=args.height,
        radius_min=args.rmin,
        radius_max=args.rmax,
        tol=Tolerance(eps=args.eps),
    )
    csv_text = rows_to_csv(rows)
    if args.out_csv:
        with open(args.out_csv, "w") as fh:
            fh.write(csv_text)
        print(f"wrote {len(rows)} rows -> {args.out_csv}")
    else:
        sys.stdout.write(csv_text)
    if args.out_fig:
        from .figures import scaling_figure

        fit = None
        primary = args.dmax_list[0]
        if sum(1 for r in rows if r.dmax == primary) >= 2:
            fit = fit_scaling(rows, dmax=primary)
            print(f"fit (dmax={primary}): time ~= "
                  f"{fit.coeff_nn2:.3e}*N*n^2 + {fit.coeff_n2:.3e}*N^2, "
                  f"R^2={fit.r_squared:.3f}")
        scaling_figure(rows, fit, args.out_fig)
        print(f"figure -> {args.out_fig}")
    return 0


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    ds = read_disks(args.input)
    if args.complex:
        cx = read_complex(args.complex)
    else:
        cx = build_cech(ds, dmax=args.dmax, tol=Tolerance(eps=args.eps))
    disagreements = cross_check(ds, cx, resolution=args.resolution,
                                tol=Tolerance(eps=args.eps))
    for d in disagreements:
        where = "in complex" if d.in_complex else "not in complex"
        print(f"disagreement: {d.candidate} {where}, oracle says "
              f"{d.verdict.decision} (margin {d.verdict.margin:.3e})")
    print(f"{len(disagreements)} disagreements over {len(ds)} disks")
    return 0 if not disagreements else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cechcover",
        description="Disk coverage complexes, homology, and benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="draw a random disk scenario")
    _add_scenario_flags(p)
    p.add_argument("--out", help="output disk file (CSV, or .json); default stdout")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("build", help="build the disk-nerve complex and report")
    _add_build_flags(p)
    p.add_argument("--rips", action="store_true",
                   help="build the clique complex instead")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("rips", help="build the clique complex and report")
    _add_build_flags(p)
    p.set_defaults(func=_cmd_rips)

    p = sub.add_parser("render", help="render disks and complex to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--complex", help="reuse a complex JSON instead of rebuilding")
    p.add_argument("--dmax", type=_dmax, default=2)
    p.add_argument("--eps", type=float, default=1e-9)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out-svg", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("bench", help="time construction over a sweep")
    p.add_argument("--densities", type=_float_list, default=[1.0, 1.5, 2.0],
                   help="comma-separated densities")
    p.add_argument("--dmax-list", type=_dmax_list, default=[2],
                   help="comma-separated caps; 'full' allowed")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--width", type=float, default=6.0)
    p.add_argument("--height", type=float, default=6.0)
    p.add_argument("--rmin", type=float, default=0.5)
    p.add_argument("--rmax", type=float, default=1.0)
    p.add_argument("--eps", type=float, default=1e-9)
    p.add_argument("--out-csv", help="write timings CSV; default stdout")
    p.add_argument("--out-fig", help="write a scaling figure (png/pdf)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("crosscheck",
                       help="compare complex membership against the oracle")
    p.add_argument("--input", required=True)
    p.add_argument("--complex", help="check a complex JSON instead of rebuilding")
    p.add_argument("--dmax", type=_dmax, default=2)
    p.add_argument("--eps", type=float, default=1e-9)
    p.add_argument("--resolution", type=float, default=1e-3,
                   help="oracle grid resolution")
    p.set_defaults(func=_cmd_crosscheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiskFileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
