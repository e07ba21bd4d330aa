"""Count double cosets for small block partitions and check the involution count.

    python3 scripts/coset_census.py --max-t 6
"""
import argparse
import itertools
from dataclasses import dataclass

from galdist.double_cosets import enumerate_cosets


@dataclass
class Config:
    max_t: int = 6
    max_size: int = 3


def involutions(t):
    return sum(1 for p in itertools.permutations(range(t)) if all(p[p[i]] == i for i in range(t)))


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-t", type=int, default=Config.max_t)
    p.add_argument("--max-size", type=int, default=Config.max_size)
    cfg = Config(**vars(p.parse_args()))

    for t in range(1, cfg.max_t + 1):
        n = len(enumerate_cosets([1] * t))
        print(f"mbar=(1)^{t}: {n:>4} cosets, {involutions(t):>4} involutions")
    for mbar in itertools.product(range(1, cfg.max_size + 1), repeat=2):
        print(f"mbar={mbar}: {len(enumerate_cosets(mbar))} cosets")


if __name__ == "__main__":
    main()
