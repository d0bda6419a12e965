"""CLI for rendering mirroratom figures from CSV files.

    mirroratom-figures ratio   --par F --perp F --out PNG [--title T]
    mirroratom-figures angular --csv F [--csv F ...] --out PNG [--title T]
    mirroratom-figures all     --golden DIR --out-dir DIR

`all` regenerates the six standard figures (two ratio plots, four angular
surface triptychs) from a directory of golden CSVs using their canonical
names.  Exit codes: 0 success, 2 schema mismatch or usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .io import SchemaError, read_angular_csv, read_ratio_csv
from .render import plot_angular_surfaces, plot_ratios

_KA_VALUES = ("0.001", "2.5", "5")
_STANDARD_FIGURES = [
    ("fig1_ratio_dirichlet.png", "ratio", "dirichlet", None, "Dirichlet"),
    ("fig2_ratio_neumann.png", "ratio", "neumann", None, "Neumann"),
    ("fig3_angular_dirichlet_par.png", "angular", "dirichlet", "par",
     "Dirichlet, parallel motion"),
    ("fig4_angular_dirichlet_perp.png", "angular", "dirichlet", "perp",
     "Dirichlet, perpendicular motion"),
    ("fig5_angular_neumann_par.png", "angular", "neumann", "par",
     "Neumann, parallel motion"),
    ("fig6_angular_neumann_perp.png", "angular", "neumann", "perp",
     "Neumann, perpendicular motion"),
]


def run_ratio(args) -> int:
    plot_ratios(read_ratio_csv(args.par), read_ratio_csv(args.perp),
                args.out, title=args.title)
    return 0


def run_angular(args) -> int:
    tables = [read_angular_csv(path) for path in args.csv]
    plot_angular_surfaces(tables, args.out, title=args.title)
    return 0


def run_all(args) -> int:
    golden = Path(args.golden)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, kind, bc, axis, title in _STANDARD_FIGURES:
        if kind == "ratio":
            plot_ratios(read_ratio_csv(golden / f"ratio_{bc}_par.csv"),
                        read_ratio_csv(golden / f"ratio_{bc}_perp.csv"),
                        out_dir / name, title=title)
        else:
            tables = [read_angular_csv(golden / f"angular_{bc}_{axis}_ka{ka}.csv")
                      for ka in _KA_VALUES]
            plot_angular_surfaces(tables, out_dir / name, title=title)
        print(f"wrote {out_dir / name}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mirroratom-figures",
                                     description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True)

    ratio = subs.add_parser("ratio", help="two-curve kernel ratio plot")
    ratio.add_argument("--par", required=True)
    ratio.add_argument("--perp", required=True)
    ratio.add_argument("--out", required=True)
    ratio.add_argument("--title", default="")
    ratio.set_defaults(func=run_ratio)

    ang = subs.add_parser("angular", help="3-D angular surface panels")
    ang.add_argument("--csv", action="append", required=True,
                     help="angular CSV; repeat for one panel per ka")
    ang.add_argument("--out", required=True)
    ang.add_argument("--title", default="")
    ang.set_defaults(func=run_angular)

    everything = subs.add_parser("all", help="regenerate the six standard figures")
    everything.add_argument("--golden", required=True,
                            help="directory of canonical CSVs")
    everything.add_argument("--out-dir", required=True)
    everything.set_defaults(func=run_all)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
