"""Command-line front end.

Examples::

    wban energy --sensor EEG --scheme baseline --rate max
    wban storage --sensor EEG --scheme cs --alpha 8 --rate max --format json
    wban sweep arrhythmia --start 0 --stop 64 --step 8 --ec 2.0 --format csv
    wban sweep compression --alphas 1 2 4 8 16
    wban reproduce --tolerance 1%

Exit codes: 0 success, 1 validation/model error, 2 reproduction mismatch.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import asdict

from . import cs
from .catalog import Catalog, ComputeLabel, ComputeProfile, default_catalog, load_catalog
from .errors import WbanError
from .report import (
    FLAG_COLUMNS,
    ReportRow,
    parse_tolerance,
    render,
    render_reproduction,
    reproduce,
    with_capacity,
)
from .schemes import (
    Aggregation,
    AnomalyDriven,
    Baseline,
    CsBased,
    EventProfile,
    SEIZURE_DEFAULT,
    evaluate,
    geometric_grid,
    integer_grid,
    strip_energy,
    sweep_arrhythmia,
    sweep_compression,
)

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2

ID_COLUMNS = ["sensor", "scheme", "f_s_hz"]
COLUMNS = {
    "energy": ["e_s_j_per_day", "e_t_j_per_day", "e_c_j_per_day", "e_buf_j_per_day", "e_total_j_per_day"],
    "lifetime": ["e_total_j_per_day", "lifetime_days"],
    "storage": ["storage_bytes_per_year", "storage_mib_per_year", "storage_gib_per_year"],
}


def _load(args) -> Catalog:
    path = args.config or os.environ.get("WBAN_CONFIG")
    catalog = load_catalog(path) if path else default_catalog()
    if getattr(args, "battery_capacity_j", None) is not None:
        catalog = with_capacity(catalog, args.battery_capacity_j)
    return catalog


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rate(spec, rate: str) -> float:
    if rate == "min":
        return spec.f_min_hz
    if rate == "max":
        return spec.f_max_hz
    try:
        return float(rate)
    except ValueError:
        raise WbanError(f"--rate must be min, max or a number, got {rate!r}") from None


def _compute(args, label):
    if args.ec is None:
        return None
    return ComputeProfile(args.ec, label)


def _scheme(args):
    if args.scheme == "baseline":
        return Baseline()
    if args.scheme == "aggregate":
        return Aggregation(args.samples_per_packet)
    events = EventProfile(args.events_per_month, args.event_duration_s, args.transmit_extra_s)
    if args.scheme == "anomaly":
        return AnomalyDriven(events, _compute(args, ComputeLabel.TRADITIONAL_ANOMALY))
    return CsBased(events, _compute(args, ComputeLabel.CS_BASED),
                   cs.CsConfig.from_alpha(args.cs_n, args.alpha), args.transmit_compressed)


def cmd_evaluate(args) -> int:
    catalog = _load(args)
    if args.sensor:
        try:
            specs = [catalog.sensor(name) for name in args.sensor]
        except KeyError as exc:
            raise WbanError(exc.args[0]) from None
    else:
        specs = list(catalog.sensors)
    scheme = _scheme(args)
    columns = ID_COLUMNS + COLUMNS[args.command] + list(FLAG_COLUMNS) + ["error"]
    rows, status = [], EXIT_OK
    for spec in specs:
        try:
            result = evaluate(spec, scheme, _rate(spec, args.rate), catalog,
                              allow_out_of_range=args.allow_out_of_range,
                              allow_uncalibrated=args.allow_uncalibrated)
            rows.append({**asdict(ReportRow.from_result(result)), "error": ""})
        except WbanError as exc:
            status = EXIT_INVALID
            rows.append({**{c: None for c in columns}, "sensor": spec.name, "scheme": scheme.name,
                         "error": f"{type(exc).__name__}: {exc}"})
    _emit(render(rows, columns, args.format), args.out)
    return status


def cmd_sweep(args) -> int:
    catalog = _load(args)
    if args.kind == "arrhythmia":
        spec = catalog.sensor(args.sensor or "ECG")
        f_s = _rate(spec, args.rate)
        grid = integer_grid(args.start, args.stop, args.step)
        label = ComputeLabel.TRADITIONAL_ANOMALY if args.scheme == "anomaly" else ComputeLabel.CS_BASED
        compute = _compute(args, label)
        if compute is None:
            profile = catalog.compute_profile(spec.name, label)
            if profile is None or not (profile.calibrated or args.allow_uncalibrated):
                raise WbanError(f"{spec.name} has no calibrated {label.value} compute energy; pass --ec")
            compute = profile
        e_strip = strip_energy(f_s, catalog.radio)
        rows = []
        for n, r in sweep_arrhythmia(spec, grid, compute, args.scheme, f_s, catalog, args.alpha):
            rows.append({"events_per_day": n, "e_strip_j": e_strip,
                         **asdict(ReportRow.from_result(r))})
        columns = ["events_per_day", "sensor", "scheme", "f_s_hz", "e_strip_j", "e_t_j_per_day",
                   "e_total_j_per_day", "lifetime_days", "storage_mib_per_year", *FLAG_COLUMNS]
    else:
        spec = catalog.sensor(args.sensor or "EEG")
        alphas = args.alphas
        if args.geometric:
            alphas = geometric_grid(args.geometric[0], args.geometric[1])
        if not alphas:
            raise WbanError("empty compression grid")
        compute = _compute(args, ComputeLabel.CS_BASED)
        rows = []
        for alpha, r, stats in sweep_compression(
                alphas, spec, _rate(spec, args.rate), catalog, compute, SEIZURE_DEFAULT,
                n=args.cs_n, k=args.k, trials=args.trials, seed=args.seed, orthonormal=args.orthonormal):
            rows.append({"alpha": float(alpha), "m": round(args.cs_n / alpha),
                         "distortion_mean": stats.mean, "distortion_p95": stats.p95,
                         **asdict(ReportRow.from_result(r))})
        columns = ["alpha", "m", "sensor", "f_s_hz", "e_total_j_per_day", "lifetime_days",
                   "storage_bytes_per_year", "storage_mib_per_year", "distortion_mean",
                   "distortion_p95", *FLAG_COLUMNS]
    _emit(render(rows, columns, args.format), args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    catalog = _load(args)
    tol = parse_tolerance(args.tolerance) if args.tolerance else None
    checks = reproduce(catalog, tol)
    _emit(render_reproduction(checks, args.format), args.out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_MISMATCH


def _common(p):
    p.add_argument("--config", help="catalog JSON file (default: $WBAN_CONFIG or built-in catalog)")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--battery-capacity-j", type=float, help="override battery capacity (J)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wban", description="WBAN sensor energy and storage model")
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("energy", "storage", "lifetime"):
        p = sub.add_parser(name, help=f"{name} per sensor under one scheme")
        _common(p)
        p.add_argument("--sensor", action="append", help="sensor name (repeatable; default all)")
        p.add_argument("--scheme", choices=("baseline", "aggregate", "anomaly", "cs"), default="baseline")
        p.add_argument("--rate", default="max", help="min, max, or a sampling rate in Hz")
        p.add_argument("--samples-per-packet", type=int, help="aggregation k (default: as many as fit)")
        p.add_argument("--alpha", type=float, default=8.0, help="CS compression ratio")
        p.add_argument("--cs-n", type=int, default=256, help="CS window length in samples")
        p.add_argument("--events-per-month", type=float, default=SEIZURE_DEFAULT.events_per_month)
        p.add_argument("--event-duration-s", type=float, default=SEIZURE_DEFAULT.event_duration_s)
        p.add_argument("--transmit-extra-s", type=float, default=SEIZURE_DEFAULT.transmit_extra_s)
        p.add_argument("--ec", type=float, help="computation energy, J/day")
        p.add_argument("--transmit-compressed", action="store_true",
                       help="charge CS event transmission at the compressed rate")
        p.add_argument("--allow-uncalibrated", action="store_true")
        p.add_argument("--allow-out-of-range", action="store_true")
        p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", help="parameter sweeps")
    _common(p)
    p.add_argument("kind", choices=("arrhythmia", "compression"))
    p.add_argument("--sensor")
    p.add_argument("--rate", default="max")
    p.add_argument("--scheme", choices=("anomaly", "cs"), default="anomaly")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--stop", type=int, default=64)
    p.add_argument("--step", type=int, default=8)
    p.add_argument("--ec", type=float, help="computation energy, J/day")
    p.add_argument("--allow-uncalibrated", action="store_true")
    p.add_argument("--alpha", type=float, default=8.0)
    p.add_argument("--alphas", type=float, nargs="*", default=[1, 2, 4, 8, 16])
    p.add_argument("--geometric", type=float, nargs=2, metavar=("START", "STOP"),
                   help="doubling alpha grid instead of --alphas")
    p.add_argument("--cs-n", type=int, default=256)
    p.add_argument("--k", type=int, default=8, help="sparsity of the distortion test vectors")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orthonormal", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="compare the model with the reference tables")
    _common(p)
    p.add_argument("--tolerance", help="relative tolerance for every numeric cell, e.g. 1%%")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WbanError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
