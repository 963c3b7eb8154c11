"""Distribution of the Hilbert-square deficiency over random maximal real
complete-intersection profiles, split by dimension.

    python3 scripts/deficiency_survey.py --count 5000
"""

import argparse
import collections
import random
from dataclasses import dataclass

from smiththom.generators import random_maximal_ci_profile
from smiththom.hilbert_square import deficiency_square


@dataclass
class SurveyConfig:
    count: int = 2000
    seed: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=SurveyConfig.count)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    cfg = SurveyConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    table = collections.defaultdict(collections.Counter)
    for _ in range(cfg.count):
        p = random_maximal_ci_profile(rng)
        table[p.n][deficiency_square(p).deficiency] += 1
    for n in sorted(table):
        row = table[n]
        total = sum(row.values())
        top = ", ".join(f"{d}:{c}" for d, c in sorted(row.items())[:8])
        print(f"n={n}: {total:5} profiles, maximal square {row[0]:5}  [{top}]")


if __name__ == "__main__":
    main()
