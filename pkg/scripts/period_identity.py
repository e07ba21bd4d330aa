"""Compare the closed-form spherical period with the step-by-step recursion.

    python3 scripts/period_identity.py --max-r 2 --max-block 2 --alphabet abcd
"""
import argparse
import itertools
import json
import time
from dataclasses import asdict, dataclass

from galdist.spherical_periods import PeriodSpec, spherical_period_closed, spherical_period_recursive


@dataclass
class Config:
    max_r: int = 2
    max_block: int = 2
    alphabet: str = "abcd"
    out: str = ""


def specs(cfg: Config):
    blocks = [tuple(w) for n in range(1, cfg.max_block + 1)
              for w in itertools.product(cfg.alphabet, repeat=n)]
    for r in range(1, cfg.max_r + 1):
        for sigma in itertools.product(blocks, repeat=r):
            yield PeriodSpec(sigma)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for name, val in asdict(Config()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    cfg = Config(**vars(p.parse_args()))

    rows, t0 = [], time.perf_counter()
    for spec in specs(cfg):
        a = time.perf_counter()
        closed = spherical_period_closed(spec)
        b = time.perf_counter()
        rec = spherical_period_recursive(spec, max_r=cfg.max_r)
        c = time.perf_counter()
        rows.append({"sigma": "|".join(",".join(x) for x in spec.sigma), "equal": closed == rec,
                     "closed_ms": round(1000 * (b - a), 2), "recursive_ms": round(1000 * (c - b), 2)})
    total = time.perf_counter() - t0
    bad = [r for r in rows if not r["equal"]]
    print(f"{len(rows)} specs, {len(bad)} mismatches, {total:.2f}s")
    by_r = {}
    for r in rows:
        by_r.setdefault(r["sigma"].count("|") + 1, []).append(r["recursive_ms"])
    for r, ms in sorted(by_r.items()):
        print(f"  r={r}: {len(ms)} specs, mean recursion {sum(ms) / len(ms):.1f} ms")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=1)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
