"""Command-line front end: ``xsteer {point,sweep,threshold,figure}``.

Exit codes: 0 ok, 2 usage or domain error, 3 no crossing found, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..channels import ChannelKind
from ..measures import report
from ..qmath import DomainError
from ..states import bloch_extract
from . import figures
from .grid import FAMILY_PARAM, Axis, GridSpec, evolved_state, fmt, grid_rows, parse_real, to_csv
from .threshold import MIN_SCAN_POINTS, SCAN_POINTS, scan_measure

EXIT_OK, EXIT_USAGE, EXIT_NO_CROSSING, EXIT_IO = 0, 2, 3, 4


class OutputError(Exception):
    pass


def _channel(name):
    return None if name == "none" else ChannelKind.parse(name)


def _fixed(args) -> dict:
    fixed = {}
    if args.alpha is not None:
        fixed["alpha"] = parse_real(args.alpha)
    if args.v is not None:
        fixed["v"] = parse_real(args.v)
    if args.strength is not None:
        fixed["strength"] = parse_real(args.strength)
    other = {"pure": "v", "mixed": "alpha"}[args.family]
    if other in fixed:
        raise DomainError(f"--{other} does not apply to the {args.family} family")
    return fixed


def _emit(text: str, out: str):
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(str(exc)) from exc


def _measures(spec: str) -> list[str]:
    if spec == "all":
        return ["C", "B", "S"]
    names = [m.strip() for m in spec.split(",") if m.strip()]
    for m in names:
        if m not in ("C", "B", "S"):
            raise DomainError(f"unknown measure {m!r}")
    return names


def cmd_point(args) -> int:
    fixed = _fixed(args)
    channel = _channel(args.channel)
    param_name = FAMILY_PARAM[args.family]
    if param_name not in fixed:
        raise DomainError(f"--{param_name} is required for the {args.family} family")
    if channel is not None and "strength" not in fixed:
        raise DomainError("--strength is required with a channel")
    rho = evolved_state(args.family, channel, fixed[param_name], fixed.get("strength"))
    rep = report(rho)
    bloch = bloch_extract(rho)
    if args.format == "json":
        data = {
            "family": args.family,
            param_name: fixed[param_name],
            "channel": args.channel,
            "strength": fixed.get("strength"),
            **rep.as_dict(),
            "bloch": {k: float(v) for k, v in zip(("c1", "c2", "c3", "r", "s"), bloch.astuple())},
            "state": json.loads(rho.to_json()),
        }
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    else:
        header = ["C", "B", "S", "entangled", "nonlocal", "steerable", "c1", "c2", "c3", "r", "s"]
        d = rep.as_dict()
        row = [fmt(d["C"]), fmt(d["B"]), fmt(d["S"])]
        row += [str(d[k]).lower() for k in ("entangled", "nonlocal", "steerable")]
        row += [fmt(x) for x in bloch.astuple()]
        _emit(",".join(header) + "\n" + ",".join(row) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if not args.grid:
        raise DomainError("sweep needs --grid")
    if len(args.grid) > 2:
        raise DomainError("--grid may be given at most twice")
    axes = tuple(Axis.parse(g) for g in args.grid)
    spec = GridSpec(args.family, _channel(args.channel), axes, _fixed(args))
    header, rows = grid_rows(spec, _measures(args.measure), args.impl)
    if args.format == "csv":
        _emit(to_csv(header, rows), args.out)
    else:
        records = [dict(zip(header, map(float, row))) for row in rows.tolist()]
        _emit(json.dumps(records) + "\n", args.out)
    return EXIT_OK


def cmd_threshold(args) -> int:
    if not args.grid or len(args.grid) != 1:
        raise DomainError("threshold needs exactly one --grid name:lo:hi[:n] scan axis")
    axis = Axis.parse(args.grid[0], default_count=SCAN_POINTS)
    if axis.count < MIN_SCAN_POINTS:
        raise DomainError(f"scan density must be at least {MIN_SCAN_POINTS}")
    if args.measure not in ("C", "B", "S"):
        raise DomainError("threshold needs a single --measure C, B or S")
    fixed = _fixed(args)
    fixed.pop(axis.param, None)
    channel = _channel(args.channel)
    # GridSpec validates family/axis/channel compatibility
    GridSpec(args.family, channel, (axis,), fixed)
    result = scan_measure(args.family, channel, fixed, axis, args.measure, args.tol, args.impl)
    if args.format == "json":
        data = {"axis": axis.name, **result.as_dict()}
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    else:
        lines = [f"{axis.name},direction"]
        lines += [f"{c.param:.17g},{c.direction}" for c in result.crossings]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if result.crossings else EXIT_NO_CROSSING


def cmd_figure(args) -> int:
    ids = figures.FIGURES if args.figure_id == "all" else (args.figure_id,)
    for fid in ids:
        try:
            paths = figures.write(fid, args.out or ".")
        except OSError as exc:
            raise OutputError(str(exc)) from exc
        for p in paths:
            print(p)
    return EXIT_OK


def _state_options(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=("pure", "mixed"), required=True)
    p.add_argument("--alpha", help="pure-family angle in radians (accepts e.g. pi/4)")
    p.add_argument("--v", help="mixed-family weight in [0, 1]")
    p.add_argument("--channel", choices=("ad", "pd", "pf", "bf", "none"), default="none")
    p.add_argument("--strength", help="decoherence strength d or p in [0, 1]")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xsteer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="all measures for one state")
    _state_options(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", help="measures over a 1-D or 2-D grid")
    _state_options(p)
    p.add_argument("--grid", action="append", help='axis "name:lo:hi:n"; repeat for a 2-D grid')
    p.add_argument("--measure", default="all", help="C, B, S, a comma list, or all")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--impl", choices=("closed", "oracle"), default="closed")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("threshold", help="where a measure crosses its classical bound")
    _state_options(p)
    p.add_argument("--grid", action="append", help=f'scan axis "name:lo:hi[:n]", n defaults to {SCAN_POINTS}')
    p.add_argument("--measure", required=True, choices=("C", "B", "S"))
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--impl", choices=("closed", "oracle"), default="closed")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("figure", help="write figure datasets as CSV")
    p.add_argument("figure_id", choices=figures.FIGURES + ("all",))
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"xsteer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OutputError as exc:
        print(f"xsteer: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
