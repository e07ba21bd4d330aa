"""Distinction verdicts over the enumerated ladder suite, grouped by line.

    python3 scripts/classification_grid.py --max-t 4
"""
import argparse
from collections import Counter
from dataclasses import asdict, dataclass

from galdist.distinction import proper_ladder_distinguished
from galdist.double_cosets import contributing_cosets
from galdist.suite import SELF_DUAL_LINES, self_dual_ladders, suite_registry


@dataclass
class Config:
    max_t: int = 4
    max_len: int = 3
    show: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for name, val in asdict(Config()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    cfg = Config(**vars(p.parse_args()))
    reg = suite_registry()

    print(f"{'line':<10} {'l':>2} {'t':>2} {'ladders':>8} {'dist':>5} {'with cosets':>12}")
    for rho, eta in SELF_DUAL_LINES:
        ladders = self_dual_ladders(reg, rho, eta, cfg.max_t, cfg.max_len)
        by_t = Counter(len(m) for m in ladders)
        for t in sorted(by_t):
            group = [m for m in ladders if len(m) == t]
            dist = [m for m in group if proper_ladder_distinguished(m, reg).distinguished]
            backed = sum(1 for m in dist if contributing_cosets(list(m), reg))
            name = ("eta*" if eta else "") + rho
            print(f"{name:<10} {reg[rho].l:>2} {t:>2} {len(group):>8} {len(dist):>5} {backed:>12}")
            for m in dist[:cfg.show]:
                print("    ", m)


if __name__ == "__main__":
    main()
