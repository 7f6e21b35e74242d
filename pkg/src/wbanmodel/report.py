"""Report rows, output formatting, and regression against the reference tables."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, replace

from .catalog import Catalog, RateClass, default_catalog, max_transmission_rate_bits
from .energy import sampling_energy_per_day
from .expected import NON_REPRODUCIBLE, TABLES, ExpectedTable, Tolerance
from .schemes import (
    Aggregation,
    AnomalyDriven,
    Baseline,
    CsBased,
    Metric,
    SchemeResult,
    evaluate,
    max_samples_per_packet,
    qualitative_comparison,
    savings_ratio,
)


@dataclass(frozen=True)
class ReportRow:
    sensor: str
    scheme: str
    f_s_hz: float
    e_s_j_per_day: float
    e_t_j_per_day: float
    e_c_j_per_day: float
    e_buf_j_per_day: float
    e_total_j_per_day: float
    lifetime_days: float
    storage_bytes_per_year: float
    storage_mib_per_year: float
    storage_gib_per_year: float
    saturated: bool
    uncalibrated_compute: bool
    extrapolated_adc: bool

    @classmethod
    def from_result(cls, r: SchemeResult) -> ReportRow:
        e = r.energy
        return cls(r.sensor, r.scheme, r.f_s, e.e_s, e.e_t, e.e_c, e.e_buf, e.e_total,
                   r.lifetime_days, r.storage.bytes_per_year, r.storage.display_mib,
                   r.storage.display_gib, r.saturated, r.uncalibrated_compute, r.extrapolated_adc)


FLAG_COLUMNS = ("saturated", "uncalibrated_compute", "extrapolated_adc")


def render(rows: list[dict], columns: list[str], fmt: str) -> str:
    """Render dict rows as an aligned text table, CSV, or JSON.

    JSON and CSV carry full float precision; the text table shows 2 decimals.
    """
    if fmt == "json":
        return json.dumps([{c: r[c] for c in columns} for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({c: repr(r[c]) if isinstance(r[c], float) else r[c] for c in columns})
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")

    def cell(v):
        if isinstance(v, bool):
            return "yes" if v else "-"
        if isinstance(v, float):
            if v != 0 and (abs(v) < 0.005 or abs(v) >= 1e7):
                return f"{v:.2e}"
            return f"{v:.2f}"
        return str(v)

    body = [[cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(b[i]) for b in body]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(b, widths)) for b in body]
    return "\n".join(lines) + "\n"


# --- regression against the reference tables ---------------------------------

def _baseline(spec, f, catalog):
    return evaluate(spec, Baseline(), f, catalog)


def _minmax_values(catalog, fn):
    out = {}
    for spec in catalog.sensors:
        out[(spec.name, "min")] = fn(spec, spec.f_min_hz)
        out[(spec.name, "max")] = fn(spec, spec.f_max_hz)
    return out


def compute_tables(catalog: Catalog | None = None) -> dict[str, dict[tuple[str, str], object]]:
    """Model values keyed like the reference tables: {table_id: {(row, column): value}}."""
    c = catalog or default_catalog()
    eeg = c.sensor("EEG")
    agg = Aggregation()

    def base(spec, f):
        return _baseline(spec, f, c)

    def aggr(spec, f):
        return evaluate(spec, agg, f, c)

    tables = {
        "max_transmission_rate": {(s.name, "value"): max_transmission_rate_bits(s) for s in c.sensors},
        "sampling_energy_bound": {
            (s.name, "value"): sampling_energy_per_day(s.f_max_hz, s.resolution_bits) for s in c.sensors
        },
        "baseline_energy": _minmax_values(c, lambda s, f: base(s, f).energy.e_total),
        # the shortest lifetime comes from the highest rate
        "baseline_lifetime": {
            (s.name, col): base(s, f).lifetime_days
            for s in c.sensors for col, f in (("min", s.f_max_hz), ("max", s.f_min_hz))
        },
        "baseline_storage": {
            **{(s.name, "min"): base(s, s.f_min_hz).storage.display_mib for s in c.sensors},
            **{(s.name, "max"): base(s, s.f_max_hz).storage.display_gib for s in c.sensors},
        },
        "samples_per_packet": {(s.name, "value"): max_samples_per_packet(s, c.radio) for s in c.sensors},
        "aggregation_energy": _minmax_values(c, lambda s, f: aggr(s, f).energy.e_total),
        "aggregation_lifetime": {
            (s.name, col): aggr(s, f).lifetime_days
            for s in c.sensors for col, f in (("min", s.f_max_hz), ("max", s.f_min_hz))
        },
    }

    anomaly = {f: evaluate(eeg, AnomalyDriven(), f, c) for f in (eeg.f_min_hz, eeg.f_max_hz)}
    cs_res = {f: evaluate(eeg, CsBased(), f, c) for f in (eeg.f_min_hz, eeg.f_max_hz)}
    lo, hi = eeg.f_min_hz, eeg.f_max_hz
    tables["anomaly_eeg_energy"] = {("EEG", "min"): anomaly[lo].energy.e_total,
                                    ("EEG", "max"): anomaly[hi].energy.e_total}
    tables["anomaly_eeg_lifetime"] = {("EEG", "min"): anomaly[hi].lifetime_days,
                                      ("EEG", "max"): anomaly[lo].lifetime_days}
    tables["cs_eeg_energy"] = {("EEG", "min"): cs_res[lo].energy.e_total,
                               ("EEG", "max"): cs_res[hi].energy.e_total}
    tables["cs_eeg_lifetime"] = {("EEG", "min"): cs_res[hi].lifetime_days,
                                 ("EEG", "max"): cs_res[lo].lifetime_days}
    tables["event_storage"] = {
        ("EEG (Anomaly)", "min"): anomaly[lo].storage.display_mib,
        ("EEG (Anomaly)", "max"): anomaly[hi].storage.display_mib,
        ("EEG (Compressed)", "min"): cs_res[lo].storage.display_mib,
        ("EEG (Compressed)", "max"): cs_res[hi].storage.display_mib,
    }

    low_rate = [s for s in c.sensors if s.rate_class is RateClass.LOW]
    eeg_base_hi = base(eeg, hi)
    tables["savings_ratios"] = {
        ("aggregation, low-rate sensors, max energy", "ratio"): max(
            savings_ratio(base(s, s.f_max_hz), aggr(s, s.f_max_hz)) for s in low_rate),
        ("aggregation, EEG/ECG, max energy", "ratio"): savings_ratio(eeg_base_hi, aggr(eeg, hi)),
        ("aggregation, EEG/ECG, min energy", "ratio"): savings_ratio(base(eeg, lo), aggr(eeg, lo)),
        ("anomaly-driven, EEG energy", "ratio"): savings_ratio(eeg_base_hi, anomaly[hi]),
        ("CS-based, EEG energy", "ratio"): savings_ratio(eeg_base_hi, cs_res[hi]),
        ("anomaly-driven, EEG storage", "ratio"): savings_ratio(eeg_base_hi, anomaly[hi], Metric.STORAGE),
        ("CS over anomaly-driven, EEG storage", "ratio"): savings_ratio(anomaly[hi], cs_res[hi], Metric.STORAGE),
        ("CS-based, EEG storage", "ratio"): savings_ratio(eeg_base_hi, cs_res[hi], Metric.STORAGE),
    }
    tables["scheme_comparison"] = {
        (scheme, col): getattr(q, col).value
        for scheme, q in qualitative_comparison().items()
        for col in ("latency", "raw_data", "extensibility")
    }
    return tables


@dataclass(frozen=True)
class CellCheck:
    table: str
    row: str
    column: str
    expected: object
    computed: object
    tolerance: str
    passed: bool

    @property
    def delta(self):
        if isinstance(self.expected, str) or isinstance(self.computed, str):
            return None
        return self.computed - self.expected

    @property
    def rel_delta(self):
        d = self.delta
        if d is None or self.expected == 0:
            return None
        return d / abs(self.expected)


def parse_tolerance(text: str) -> Tolerance:
    """'2%' or '0.02' -> relative 2%."""
    text = text.strip()
    value = float(text[:-1]) / 100 if text.endswith("%") else float(text)
    if not math.isfinite(value) or value < 0:
        raise ValueError(f"bad tolerance {text!r}")
    return Tolerance("relative", value)


def reproduce(catalog: Catalog | None = None, tolerance: Tolerance | None = None,
              tables: tuple[ExpectedTable, ...] = TABLES) -> list[CellCheck]:
    """Compare every reference cell with the model.

    ``tolerance`` replaces the per-cell tolerance of every numeric cell.
    """
    computed = compute_tables(catalog)
    checks = []
    for t in tables:
        values = computed[t.table_id]
        for cell in t.cells:
            got = values[(cell.row, cell.column)]
            tol = cell.tolerance
            if tolerance is not None and tol.kind != "exact":
                tol = tolerance
            checks.append(CellCheck(t.table_id, cell.row, cell.column, cell.expected, got,
                                    tol.describe(), tol.check(cell.expected, got)))
    return checks


def checks_to_rows(checks: list[CellCheck]) -> list[dict]:
    rows = []
    for ch in checks:
        d = asdict(ch)
        d["delta"] = ch.delta
        d["rel_delta"] = ch.rel_delta
        d["status"] = "PASS" if ch.passed else "FAIL"
        rows.append(d)
    return rows


CHECK_COLUMNS = ["table", "row", "column", "expected", "computed", "delta", "rel_delta", "tolerance", "status"]


def render_reproduction(checks: list[CellCheck], fmt: str) -> str:
    rows = checks_to_rows(checks)
    failed = sum(not ch.passed for ch in checks)
    if fmt == "json":
        return json.dumps({
            "cells": [{k: r[k] for k in CHECK_COLUMNS} for r in rows],
            "passed": len(checks) - failed,
            "failed": failed,
            "non_reproducible": [{"figure": f, "reason": why} for f, why in NON_REPRODUCIBLE],
        }, indent=2) + "\n"
    if fmt == "csv":
        return render(rows, CHECK_COLUMNS, "csv")

    def fmt_num(v):
        if v is None:
            return ""
        if isinstance(v, str):
            return v
        return f"{v:.6g}"

    text_rows = [{**r, **{k: fmt_num(r[k]) for k in ("expected", "computed", "delta")},
                  "rel_delta": "" if r["rel_delta"] is None else f"{r['rel_delta'] * 100:+.2f}%"}
                 for r in rows]
    out = render(text_rows, CHECK_COLUMNS, "table")
    out += f"\n{len(checks) - failed}/{len(checks)} cells within tolerance\n"
    out += "Not reproduced (figures without readable values):\n"
    out += "".join(f"  - {f}: {why}\n" for f, why in NON_REPRODUCIBLE)
    return out


def with_capacity(catalog: Catalog, capacity_j: float) -> Catalog:
    return catalog.replace(battery=replace(catalog.battery, capacity_j=capacity_j))
