"""Print the h^{k,k} versus b_{2k} table for even-dimensional complete
intersections, with the rows where they agree listed at the end.

    python3 scripts/classify_table.py --max-dim 8 --max-codim 3 --max-degree 5
"""

import argparse
from dataclasses import dataclass

from smiththom.classify import ScanRange, equality_rows, rows_to_csv, scan


@dataclass
class TableConfig:
    max_dim: int = 6
    max_codim: int = 3
    max_degree: int = 4
    workers: int = 1
    csv: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=TableConfig.max_dim)
    ap.add_argument("--max-codim", type=int, default=TableConfig.max_codim)
    ap.add_argument("--max-degree", type=int, default=TableConfig.max_degree)
    ap.add_argument("--workers", type=int, default=TableConfig.workers)
    ap.add_argument("--csv", action="store_true")
    cfg = TableConfig(**vars(ap.parse_args()))
    rows = scan(ScanRange(cfg.max_dim, cfg.max_codim, cfg.max_degree), workers=cfg.workers)
    if cfg.csv:
        print(rows_to_csv(rows), end="")
        return
    for r in rows:
        ratio = r.h_kk / r.b_2k
        print(f"n={r.n:2} P^{r.ambient:<2} {str(r.degrees):12} h_kk={r.h_kk:>10} b_2k={r.b_2k:>10} ratio={ratio:.3f}")
    print("\nequality:", ", ".join(f"n={r.n} {r.degrees}" for r in equality_rows(rows)))


if __name__ == "__main__":
    main()
