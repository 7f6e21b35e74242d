"""Inner-product distortion of the Gaussian projection over a grid of m.

    python scripts/cs_distortion_grid.py --n 256 --k 8 --seeds 10
"""
import argparse

import numpy as np

from wbanmodel.cs import CsConfig, inner_product_distortion


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=256)
    ap.add_argument("--k", type=int, default=8)
    ap.add_argument("--m", type=int, nargs="*", default=[8, 16, 32, 64, 128, 256])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seeds", type=int, default=5)
    args = ap.parse_args()

    print("m,alpha,mean,p95")
    for m in args.m:
        stats = [inner_product_distortion(CsConfig(args.n, m, s), args.trials, args.k) for s in range(args.seeds)]
        print(f"{m},{args.n / m:g},{np.mean([s.mean for s in stats]):.5f},{np.mean([s.p95 for s in stats]):.5f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
