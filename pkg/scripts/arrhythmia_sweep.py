"""ECG energy, lifetime and storage against arrhythmia events per day.

ECG computation energy has no calibrated default, so pass the values to
compare, e.g.:

    python scripts/arrhythmia_sweep.py --ec-anomaly 30 --ec-cs 5 --stop 64
"""
import argparse
import csv
import sys

from wbanmodel.catalog import ComputeLabel, ComputeProfile, default_catalog
from wbanmodel.schemes import integer_grid, sweep_arrhythmia


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--ec-anomaly", type=float, required=True, help="J/day")
    ap.add_argument("--ec-cs", type=float, required=True, help="J/day")
    ap.add_argument("--rate", type=float, default=1000.0, help="ECG sampling rate, Hz")
    ap.add_argument("--start", type=int, default=0)
    ap.add_argument("--stop", type=int, default=64)
    ap.add_argument("--step", type=int, default=4)
    args = ap.parse_args()

    catalog = default_catalog()
    ecg = catalog.sensor("ECG")
    grid = integer_grid(args.start, args.stop, args.step)
    anomaly = sweep_arrhythmia(ecg, grid, ComputeProfile(args.ec_anomaly, ComputeLabel.TRADITIONAL_ANOMALY),
                               "anomaly", args.rate, catalog)
    cs = sweep_arrhythmia(ecg, grid, ComputeProfile(args.ec_cs, ComputeLabel.CS_BASED), "cs", args.rate, catalog)

    w = csv.writer(sys.stdout)
    w.writerow(["events_per_day", "anomaly_j_per_day", "anomaly_days", "anomaly_mib_per_year",
                "cs_j_per_day", "cs_days", "cs_mib_per_year"])
    for (n, a), (_, c) in zip(anomaly, cs):
        w.writerow([n, a.energy.e_total, a.lifetime_days, a.storage.display_mib,
                    c.energy.e_total, c.lifetime_days, c.storage.display_mib])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
