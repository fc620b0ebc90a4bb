"""Iterations and cutsets vs. graph size at average degree 3.

Sizes above ~24 take minutes per graph for the plain recursive enumerator.

    python scripts/run_size_sweep.py --sizes 10 12 14 16 18 20 22 --out results/
"""

import argparse
from pathlib import Path

from cutscan.bench import efficiency_table, sweep_size, write_rows, write_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(range(10, 23)))
    ap.add_argument("--avg-degree", type=float, default=3)
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--rng-seed", type=int, default=2002)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    rows = sweep_size(args.sizes, args.avg_degree, args.trials, args.rng_seed, jobs=args.jobs)
    args.out.mkdir(parents=True, exist_ok=True)
    with open(args.out / "size_sweep.csv", "w", newline="\n") as fh:
        write_rows(rows, fh)
    with open(args.out / "size_sweep_table.csv", "w", newline="\n") as fh:
        write_table(efficiency_table(rows), fh)
    for t in efficiency_table(rows):
        print(f"n={t.n:<3} {t.algorithm:<9} iterations={t.mean_iterations:<10.1f} "
              f"cutsets={t.mean_cutsets:<10.1f} factor={t.efficiency_factor:.3f}")


if __name__ == "__main__":
    main()
