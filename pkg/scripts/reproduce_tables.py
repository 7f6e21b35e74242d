"""Regenerate every reference table from the model and write a diff report.

    python scripts/reproduce_tables.py --outdir results
"""
import argparse
from pathlib import Path

from wbanmodel.catalog import default_catalog, load_catalog
from wbanmodel.report import render_reproduction, reproduce


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--config", default=None)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    catalog = load_catalog(args.config) if args.config else default_catalog()
    checks = reproduce(catalog)
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for fmt, ext in (("csv", "csv"), ("json", "json"), ("table", "txt")):
        (out / f"reproduction.{ext}").write_text(render_reproduction(checks, fmt), encoding="utf-8")
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} cells within tolerance; wrote {out}/reproduction.*")
    for c in failed:
        print(f"  FAIL {c.table} {c.row} {c.column}: expected {c.expected}, got {c.computed:.6g}")
    return 0 if not failed else 2


if __name__ == "__main__":
    raise SystemExit(main())
