"""Write the P / Q / Q-P curve data for the four panel sizes, both spacings.

    python scripts/curves.py --out results/
"""

import argparse
from pathlib import Path

from salpha.experiments import curve_samples, curves_csv

N_VALUES = [4, 10, 20, 50]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results")
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for spacing in ("uniform", "log"):
        samples = curve_samples(N_VALUES, args.samples, spacing)
        (out / f"curves_{spacing}.csv").write_text(curves_csv(samples))
        worst = min(s.diff for s in samples)
        print(f"{spacing}: {len(samples)} samples, min Q-P = {worst:.3e}")


if __name__ == "__main__":
    main()
