"""Check that one baker step never lengthens the longest STD cycle or raises h*.

This is an empirical observation, so the script reports counts per n and
lists any rule where it breaks.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from baker_aca import aca


@dataclass(frozen=True)
class MonotonicityConfig:
    n_min: int = 1
    n_max: int = 10


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=MonotonicityConfig.n_min)
    ap.add_argument("--n-max", type=int, default=MonotonicityConfig.n_max)
    args = ap.parse_args(argv)
    cfg = MonotonicityConfig(args.n_min, args.n_max)

    total = 0
    for n in range(cfg.n_min, cfg.n_max + 1):
        start = time.perf_counter()
        bad = aca.monotonicity_violations(n)
        total += len(bad)
        print(f"n={n:<3} rules={1 << n:<6} violations={len(bad):<4} {time.perf_counter() - start:.2f}s")
        for rule, what in bad[:5]:
            print(f"    {rule}: {what}")
    print("holds" if total == 0 else f"{total} violations")
    return 0 if total == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
