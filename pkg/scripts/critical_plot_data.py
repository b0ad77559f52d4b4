"""Emit iota, c(n) and c*(n) as CSV, ready for an external plotting tool."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from baker_aca.cli import _write_csv, critical_rows


@dataclass(frozen=True)
class CriticalConfig:
    n_max: int = 200
    out: str | None = None


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=CriticalConfig.n_max)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    cfg = CriticalConfig(args.max, args.out)
    sys.stdout.write(_write_csv(["n", "iota", "c_of_n", "c_star"], critical_rows(cfg.n_max), cfg.out))


if __name__ == "__main__":
    main()
