"""Command-line interface: ingest -> stats -> scene -> SVG / bundle.

Exit codes: 0 success, 1 usage error, 2 data error.  stdout carries only
machine-readable output (the ``stats`` JSON); everything meant for humans
goes to stderr.  With a fixed seed the outputs are byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .data_io import DataSet, parse_csv_with_report
from .errors import (
    ColumnNotFound,
    EmptyData,
    InvalidRange,
    InvalidViewport,
    ParseError,
    UnknownDataset,
)
from .figures import DEFAULT_PANEL_N, DEFAULT_SEED, DEMO_NAMES, demo_dataset
from .geometry import Orientation
from .render_svg import render
from .scene import PlotConfig, build_scene, bundle_to_json, scene_bundle
from .stats import summary

DEFAULT_WIDTH = 640
DEFAULT_DIAMOND_HEIGHT = 640
DEFAULT_SCATTER_HEIGHT = 396  # ~ width / 1.61

MODES = {
    "diamond": Orientation.DIAMOND,
    "scatter": Orientation.SCATTER_V1H,
    "scatter-swapped": Orientation.SCATTER_V2H,
}


def _default_height(orientation: Orientation, width: float) -> float:
    if orientation is Orientation.DIAMOND:
        return width * DEFAULT_DIAMOND_HEIGHT / DEFAULT_WIDTH
    return round(width * DEFAULT_SCATTER_HEIGHT / DEFAULT_WIDTH)


def _env_seed() -> int:
    raw = os.environ.get("DIAMONDPLOT_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"DIAMONDPLOT_SEED must be an integer, got {raw!r}") from None


def _read_input(args: argparse.Namespace) -> DataSet:
    raw = Path(args.input).read_bytes()
    data, rejected = parse_csv_with_report(
        raw, args.col1, args.col2, strict=not args.lenient
    )
    if rejected:
        rows = ", ".join(str(r) for r in rejected)
        print(f"skipped {len(rejected)} bad row(s): {rows}", file=sys.stderr)
    return data


def _config(args: argparse.Namespace, orientation: Orientation) -> PlotConfig:
    width = args.width if args.width is not None else DEFAULT_WIDTH
    height = args.height if args.height is not None else _default_height(orientation, width)
    return PlotConfig(
        orientation=orientation,
        viewport=(float(width), float(height)),
        title1=getattr(args, "title1", None),
        title2=getattr(args, "title2", None),
        grid=False if getattr(args, "no_grid", False) else None,
        tick_target=args.ticks,
        padding=0.05,
    )


def _write_svg(data: DataSet, args: argparse.Namespace, orientation: Orientation) -> int:
    config = _config(args, orientation)
    doc = render(build_scene(data, config))
    Path(args.out).write_bytes(doc.content)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    return _write_svg(_read_input(args), args, MODES[args.mode])


def _cmd_demo(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    data = demo_dataset(args.dataset, seed=seed, n=args.n)
    return _write_svg(data, args, MODES[args.mode])


def _cmd_stats(args: argparse.Namespace) -> int:
    stats = summary(_read_input(args))
    print(json.dumps(stats.to_dict()))
    return 0


def _cmd_bundle(args: argparse.Namespace) -> int:
    if args.input is not None:
        data = _read_input(args)
    else:
        seed = args.seed if args.seed is not None else _env_seed()
        data = demo_dataset(args.dataset, seed=seed, n=args.n)
    scenes = [
        build_scene(data, _config(args, orientation))
        for orientation in (
            Orientation.DIAMOND,
            Orientation.SCATTER_V1H,
            Orientation.SCATTER_V2H,
        )
    ]
    bundle = scene_bundle(data, summary(data), scenes)
    Path(args.out).write_bytes(bundle_to_json(bundle))
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _add_size_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--width", type=float, default=None, help="viewport width (default 640)")
    p.add_argument("--height", type=float, default=None,
                   help="viewport height (default 640 diamond, 396 scatter)")
    p.add_argument("--ticks", type=int, default=5, help="target gridlines per axis")
    p.add_argument("--no-grid", action="store_true", help="disable gridlines")


def _add_csv_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--input", required=required, help="CSV file with a header row")
    p.add_argument("--col1", required=required, help="column for variable 1")
    p.add_argument("--col2", required=required, help="column for variable 2")
    p.add_argument("--lenient", action="store_true",
                   help="skip bad rows (reported on stderr) instead of failing")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamondplot",
        description="Render bivariate data as diamond or conventional scatter plots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_plot = sub.add_parser("plot", help="plot a CSV file to SVG")
    _add_csv_flags(p_plot)
    p_plot.add_argument("--mode", choices=MODES, default="diamond")
    p_plot.add_argument("--out", required=True, help="output SVG path")
    p_plot.add_argument("--title1", default=None, help="axis title for variable 1")
    p_plot.add_argument("--title2", default=None, help="axis title for variable 2")
    _add_size_flags(p_plot)
    p_plot.set_defaults(func=_cmd_plot)

    p_demo = sub.add_parser("demo", help="plot a builtin or generated dataset")
    p_demo.add_argument("--dataset", choices=DEMO_NAMES, required=True)
    p_demo.add_argument("--mode", choices=MODES, default="diamond")
    p_demo.add_argument("--out", required=True)
    p_demo.add_argument("--seed", type=int, default=None,
                        help="sample seed (default: DIAMONDPLOT_SEED or 42)")
    p_demo.add_argument("--n", type=int, default=DEFAULT_PANEL_N,
                        help="sample size for generated panels")
    _add_size_flags(p_demo)
    p_demo.set_defaults(func=_cmd_demo)

    p_stats = sub.add_parser("stats", help="print summary statistics as JSON")
    _add_csv_flags(p_stats)
    p_stats.set_defaults(func=_cmd_stats)

    p_bundle = sub.add_parser("bundle", help="emit a scene bundle for the viewer")
    _add_csv_flags(p_bundle, required=False)
    p_bundle.add_argument("--dataset", choices=DEMO_NAMES, default=None,
                          help="use a builtin/generated dataset instead of --input")
    p_bundle.add_argument("--out", required=True)
    p_bundle.add_argument("--seed", type=int, default=None)
    p_bundle.add_argument("--n", type=int, default=DEFAULT_PANEL_N)
    _add_size_flags(p_bundle)
    p_bundle.set_defaults(func=_cmd_bundle)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Entry point returning an exit code instead of exiting."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return 0 if not exc.code else 1

    if args.command == "bundle" and (args.input is None) == (args.dataset is None):
        print("error: bundle needs exactly one of --input or --dataset", file=sys.stderr)
        return 1
    if args.command == "bundle" and args.input is not None and (
        args.col1 is None or args.col2 is None
    ):
        print("error: --input requires --col1 and --col2", file=sys.stderr)
        return 1
    if args.command in ("plot", "stats") and None in (args.col1, args.col2):
        print("error: --col1 and --col2 are required", file=sys.stderr)
        return 1

    try:
        return args.func(args)
    except (EmptyData, ColumnNotFound, ParseError, UnknownDataset, InvalidRange) as exc:
        # InvalidRange surfaces only for data whose spread breaks float
        # arithmetic, so it is a data error rather than a usage error.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidViewport, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:  # console_scripts hook
    sys.exit(run())


if __name__ == "__main__":
    main()
