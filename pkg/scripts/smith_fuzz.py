"""Run the Smith engine on random simplicial involutions and summarize.

    python3 scripts/smith_fuzz.py --count 2000 --seed 1
"""

import argparse
import collections
import random
import time
from dataclasses import dataclass

from smiththom.generators import random_involution
from smiththom.smith import smith_report, verify_relative_quotient


@dataclass
class FuzzConfig:
    count: int = 1000
    seed: int = 0


def run(cfg: FuzzConfig) -> dict:
    rng = random.Random(cfg.seed)
    stats = collections.Counter()
    deficiencies = collections.Counter()
    start = time.perf_counter()
    for _ in range(cfg.count):
        K = random_involution(rng)
        r = smith_report(K)
        stats["exact"] += r.exactness_verified
        stats["smith_dims"] += sum(r.betti_F) + 2 * sum(r.coker_dims) == sum(r.betti_X)
        stats["maximal"] += r.maximal
        if r.maximal:
            stats["relative_quotient"] += verify_relative_quotient(K)
        deficiencies[r.deficiency] += 1
    stats["seconds"] = round(time.perf_counter() - start, 2)
    return {"stats": dict(stats), "deficiency_histogram": dict(sorted(deficiencies.items()))}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=FuzzConfig.count)
    ap.add_argument("--seed", type=int, default=FuzzConfig.seed)
    res = run(FuzzConfig(**vars(ap.parse_args())))
    for k, v in res["stats"].items():
        print(f"{k:18} {v}")
    print("deficiency histogram:", res["deficiency_histogram"])


if __name__ == "__main__":
    main()
