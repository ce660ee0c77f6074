"""Command-line front end.

Subcommands: report, sweep, fig1, dispersion, series, validate.  All of them
honor --output {csv|json} and --quiet; option precedence is flags, then a
key=value config file given with --config, then built-in defaults.  CSV
output is deterministic: 17-significant-digit floats, LF line endings,
stable row order.  Exit codes: 0 success, 1 validation failure, 2 domain
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .eos import MODES, build_report, dispersion
from .errors import (
    ConvergenceError,
    NonPositiveCompressibility,
    QuadratureFailure,
    RangeDomainError,
)
from .units import state_point
from . import series as hs
from .validate import run_validation

FIG1_GAMMA_MAX = 4e-3
FIG1_POINTS = 200
FIG1_R_VALUES = (-1.0, -0.5, 0.0, 0.5, 1.0)

REPORT_FIELDS = (
    "gamma",
    "r",
    "mode",
    "kappa",
    "u",
    "depletion_fraction",
    "mu_ratio",
    "pressure_ratio",
    "energy_ratio",
    "sound_ratio",
    "flags",
)


def _f17(value: float) -> str:
    return format(float(value), ".17g")


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _parse_float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def load_config(path: str) -> dict[str, str]:
    """Read a "key = value" config file; '#' starts a comment."""
    config: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, value = line.split("=", 1)
            config[key.strip().replace("-", "_")] = value.strip()
    return config


class _Options:
    """Resolve option values with flag > config > default precedence."""

    def __init__(self, ns: argparse.Namespace, config: dict[str, str]):
        self.ns = ns
        self.config = config

    def get(self, name: str, cast, default):
        value = getattr(self.ns, name, None)
        if value is not None:
            return value
        if name in self.config:
            return cast(self.config[name])
        return default


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _note(message: str, quiet: bool) -> None:
    if not quiet:
        print(message, file=sys.stderr)


def _report_row(report) -> dict:
    row = {
        "gamma": report.gamma,
        "r": report.r,
        "mode": report.mode,
        "kappa": report.kappa,
        "u": report.u,
        "depletion_fraction": report.depletion_fraction,
        "mu_ratio": report.mu_ratio,
        "pressure_ratio": report.pressure_ratio,
        "energy_ratio": report.energy_ratio,
        "sound_ratio": report.sound_ratio,
        "flags": list(report.flags),
    }
    return row


def _rows_to_csv(fields: tuple[str, ...], rows: list[dict]) -> str:
    lines = [",".join(fields)]
    for row in rows:
        cells = []
        for field in fields:
            value = row[field]
            if isinstance(value, list):
                cells.append(";".join(value))
            elif isinstance(value, str):
                cells.append(value)
            else:
                cells.append(_f17(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _rows_to_json(rows: list[dict], single: bool = False) -> str:
    payload = rows[0] if single and len(rows) == 1 else rows
    return json.dumps(payload, indent=2) + "\n"


# -- subcommand handlers ---------------------------------------------------------


def cmd_report(ns: argparse.Namespace, config: dict[str, str]) -> int:
    opts = _Options(ns, config)
    gamma = opts.get("gamma", float, None)
    if gamma is None:
        raise ValueError("report requires --gamma (or gamma in the config file)")
    r_values = opts.get("r", _parse_float_list, [0.0])
    mode = opts.get("mode", str, "series")
    drop_m2 = bool(opts.get("drop_m2", _parse_bool, False))
    output = opts.get("output", str, "csv")
    quiet = bool(opts.get("quiet", _parse_bool, False))
    rows = [_report_row(build_report(gamma, r, mode, drop_m2)) for r in r_values]
    if output == "json":
        text = _rows_to_json(rows, single=True)
    else:
        text = _rows_to_csv(REPORT_FIELDS, rows)
    _emit(text, opts.get("out", str, None))
    for row in rows:
        if row["flags"]:
            _note(f"note: flags at r={row['r']:g}: {';'.join(row['flags'])}", quiet)
    return 0


def _sweep_grid(gamma_min: float, gamma_max: float, points: int, log: bool) -> np.ndarray:
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    if gamma_max <= gamma_min:
        raise ValueError("gamma-max must exceed gamma-min")
    if log:
        if gamma_min <= 0.0:
            raise ValueError("log spacing requires gamma-min > 0")
        return np.logspace(math.log10(gamma_min), math.log10(gamma_max), points)
    if gamma_min < 0.0:
        raise ValueError("gamma-min must be >= 0")
    return np.linspace(gamma_min, gamma_max, points)


def cmd_sweep(ns: argparse.Namespace, config: dict[str, str]) -> int:
    opts = _Options(ns, config)
    gamma_min = opts.get("gamma_min", float, 1e-6)
    gamma_max = opts.get("gamma_max", float, 4e-3)
    points = opts.get("points", int, 50)
    log = bool(opts.get("log", _parse_bool, False))
    r_values = opts.get("r", _parse_float_list, [0.0])
    mode = opts.get("mode", str, "series")
    drop_m2 = bool(opts.get("drop_m2", _parse_bool, False))
    output = opts.get("output", str, "csv")
    quiet = bool(opts.get("quiet", _parse_bool, False))
    grid = _sweep_grid(gamma_min, gamma_max, points, log)
    rows = [
        _report_row(build_report(float(gamma), r, mode, drop_m2))
        for r in r_values
        for gamma in grid
    ]
    text = _rows_to_json(rows) if output == "json" else _rows_to_csv(REPORT_FIELDS, rows)
    out = opts.get("out", str, None)
    _emit(text, out)
    _note(f"sweep: {len(rows)} rows ({len(r_values)} r values x {points} points)", quiet)
    plot = opts.get("plot", str, None)
    if plot is not None:
        from . import plots

        path = plot if plot != "AUTO" else _derived_plot_path(out, "sweep.png")
        plots.render_sweep(rows, path)
        _note(f"sweep: wrote figure {path}", quiet)
    return 0


def _derived_plot_path(out: str | None, fallback: str) -> str:
    if not out:
        return fallback
    stem = out.rsplit(".", 1)[0] if "." in out else out
    return stem + ".png"


def cmd_fig1(ns: argparse.Namespace, config: dict[str, str]) -> int:
    opts = _Options(ns, config)
    out = opts.get("out", str, "fig1.csv")
    quiet = bool(opts.get("quiet", _parse_bool, False))
    output = opts.get("output", str, "csv")
    grid = np.linspace(0.0, FIG1_GAMMA_MAX, FIG1_POINTS)
    rows = []
    for r in FIG1_R_VALUES:
        for gamma in grid:
            report = build_report(float(gamma), r, "series")
            rows.append({"gamma": float(gamma), "r": r, "energy_ratio": report.energy_ratio})
    if output == "json":
        text = _rows_to_json(rows)
    else:
        text = _rows_to_csv(("gamma", "r", "energy_ratio"), rows)
    _emit(text, out)
    _note(f"fig1: wrote {len(rows)} rows to {out}", quiet)
    plot = opts.get("plot", str, None)
    if plot is not None:
        from . import plots

        path = plot if plot != "AUTO" else _derived_plot_path(out, "fig1.png")
        plots.render_fig1(rows, path)
        _note(f"fig1: wrote figure {path}", quiet)
    return 0


def cmd_dispersion(ns: argparse.Namespace, config: dict[str, str]) -> int:
    opts = _Options(ns, config)
    gamma = opts.get("gamma", float, None)
    if gamma is None:
        raise ValueError("dispersion requires --gamma (or gamma in the config file)")
    r_values = opts.get("r", _parse_float_list, [0.0])
    x_max = opts.get("x_max", float, 5.0)
    points = opts.get("points", int, 101)
    output = opts.get("output", str, "csv")
    quiet = bool(opts.get("quiet", _parse_bool, False))
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    if x_max <= 0.0:
        raise ValueError(f"x-max must be positive, got {x_max}")
    point = state_point(gamma, r_values[0])
    rows = [
        {"x": float(x), "e_over_m2": dispersion(point, float(x)).e_over_m2}
        for x in np.linspace(0.0, x_max, points)
    ]
    text = _rows_to_json(rows) if output == "json" else _rows_to_csv(("x", "e_over_m2"), rows)
    out = opts.get("out", str, None)
    _emit(text, out)
    plot = opts.get("plot", str, None)
    if plot is not None:
        from . import plots

        path = plot if plot != "AUTO" else _derived_plot_path(out, "dispersion.png")
        plots.render_dispersion(rows, path)
        _note(f"dispersion: wrote figure {path}", quiet)
    return 0


def cmd_series(ns: argparse.Namespace, config: dict[str, str]) -> int:
    opts = _Options(ns, config)
    which = opts.get("which", str, None)
    if which is None:
        raise ValueError("series requires a quantity name")
    order = opts.get("order", int, hs.MAX_ORDER)
    drop_m2 = bool(opts.get("drop_m2", _parse_bool, False))
    output = opts.get("output", str, "csv")
    series = hs.expand_quantity(which, order, drop_m2)
    rows = [
        {
            "half_power": n,
            "r_power": j,
            "coefficient": hs.format_coefficient(q, p),
            "value": hs.coefficient_value(q, p),
        }
        for n, p, j, q in series.iter_terms()
    ]
    if output == "json":
        text = _rows_to_json(rows)
    else:
        lines = ["half_power,r_power,coefficient,value"]
        for row in rows:
            lines.append(
                f"{row['half_power']},{row['r_power']},{row['coefficient']},{_f17(row['value'])}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, opts.get("out", str, None))
    quiet = bool(opts.get("quiet", _parse_bool, False))
    _note(f"series {which} (order {order}):\n{hs.format_series(series)}", quiet)
    return 0


def cmd_validate(ns: argparse.Namespace, config: dict[str, str]) -> int:
    opts = _Options(ns, config)
    drop_m2 = bool(opts.get("drop_m2", _parse_bool, False))
    output = opts.get("output", str, "csv")
    quiet = bool(opts.get("quiet", _parse_bool, False))
    results = run_validation(drop_m2=drop_m2)
    if output == "json":
        rows = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in results]
        _emit(_rows_to_json(rows), opts.get("out", str, None))
    elif not quiet:
        for check in results:
            status = "PASS" if check.passed else "FAIL"
            print(f"{status} {check.name:<20} {check.detail}")
    failed = [c for c in results if not c.passed]
    if not quiet and output != "json":
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=("csv", "json"), default=None)
    parser.add_argument("--quiet", action="store_true", default=None)
    parser.add_argument("--config", default=None, help="key = value config file")
    parser.add_argument("--out", default=None, metavar="FILE", help="write data here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bose-eos",
        description="Zero-temperature equation of state of a weakly interacting "
        "Bose gas with finite-range corrections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="all thermodynamic ratios at one state point")
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--r", type=float, action="append", default=None)
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--drop-m2", dest="drop_m2", action="store_true", default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_report)

    p = sub.add_parser("sweep", help="ratios over a gamma grid for several r")
    p.add_argument("--gamma-min", dest="gamma_min", type=float, default=None)
    p.add_argument("--gamma-max", dest="gamma_max", type=float, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--log", action="store_true", default=None)
    p.add_argument("--r", type=float, action="append", default=None)
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--drop-m2", dest="drop_m2", action="store_true", default=None)
    p.add_argument("--plot", nargs="?", const="AUTO", default=None, metavar="PNG")
    _add_common(p)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("fig1", help="energy-ratio curves vs gamma for r in {-1,-0.5,0,0.5,1}")
    p.add_argument("--plot", nargs="?", const="AUTO", default=None, metavar="PNG")
    _add_common(p)
    p.set_defaults(handler=cmd_fig1)

    p = sub.add_parser("dispersion", help="gapless excitation spectrum E(k)/M^2")
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--r", type=float, action="append", default=None)
    p.add_argument("--x-max", dest="x_max", type=float, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--plot", nargs="?", const="AUTO", default=None, metavar="PNG")
    _add_common(p)
    p.set_defaults(handler=cmd_dispersion)

    p = sub.add_parser("series", help="exact expansion coefficients of one quantity")
    p.add_argument("which", nargs="?", choices=hs.QUANTITIES, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--drop-m2", dest="drop_m2", action="store_true", default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("validate", help="run the internal validation suite")
    p.add_argument("--drop-m2", dest="drop_m2", action="store_true", default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        config = load_config(ns.config) if ns.config else {}
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return ns.handler(ns, config)
    except RangeDomainError as exc:
        print(f"error: unphysical state: {exc}", file=sys.stderr)
        return 2
    except (ValueError, NonPositiveCompressibility, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadratureFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: I/O failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
