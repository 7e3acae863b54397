#!/usr/bin/env python3
"""
Verify Command

Runs the identity suite over the grid and reports per-identity counts.
Exit status: 0 when every instance passes, 1 on any failure.
"""

from dowling.cli.formatters import OutputFormat, write_rows
from dowling.core.exact import format_rational
from dowling.services.identities.grid_config import load_grid
from dowling.services.identities.models import IdentityReport
from dowling.services.identities.runner import run_grid


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="verify the identity catalog over a grid")
    parser.add_argument("--grid", help="grid config file (default: $DOWLING_GRID or config/default_grid.cfg)")
    parser.add_argument("--only", action="append", default=None, metavar="ID",
                        help="identity id to run; repeat or comma-separate for several")
    parser.add_argument("--zero-power", type=int, choices=(0, 1), default=1,
                        help="value of 0^0 in the right-hand sides (0 is the negative control)")
    parser.add_argument("--timing", action="store_true", help="include wall time in the report")
    parser.set_defaults(handler=run)


def _selected_ids(only):
    if only is None:
        return None
    return [identity_id.strip() for item in only for identity_id in item.split(",") if identity_id.strip()]


def _write_table(out, report: IdentityReport) -> None:
    rows = [
        {
            "identity": s.identity_id,
            "instances": s.instances,
            "passes": s.passes,
            "failures": s.failures,
            "note": s.note or "",
        }
        for s in report.summaries
    ]
    write_rows(out, OutputFormat.TABLE, ("identity", "instances", "passes", "failures", "note"), rows)
    for s in report.summaries:
        if s.first_failure is not None:
            f = s.first_failure
            bindings = ", ".join(f"{k}={format_rational(v)}" for k, v in f.bindings.items())
            out.write(f"first failure of {s.identity_id}: {bindings}: "
                      f"lhs={format_rational(f.lhs)} rhs={format_rational(f.rhs)}\n")
    line = f"total: {report.instances} instances, {report.passes} passed, {report.failures} failed"
    if report.wall_time is not None:
        line += f" in {report.wall_time}s"
    out.write(line + "\n")


def run(args, out) -> int:
    grid = load_grid(args.grid)
    report = run_grid(grid, _selected_ids(args.only), zero_to_zero=args.zero_power, timing=args.timing)

    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        out.write(report.model_dump_json(exclude_none=True) + "\n")
    elif fmt is OutputFormat.CSV:
        write_rows(out, fmt, ("identity", "instances", "passes", "failures"),
                   ({"identity": s.identity_id, "instances": s.instances,
                     "passes": s.passes, "failures": s.failures} for s in report.summaries))
    else:
        _write_table(out, report)
    return 0 if report.all_pass else 1
