"""Recompute the n=9 and n=10 rule tables and the n=12 counterexample chain.

Prints one row per rule: baker height H, attractor length FC, the rule-specific
divisor C*, the enumerated cycle lengths and the true height h*.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from baker_aca import aca, criteria
from baker_aca.baker import profile
from baker_aca.gf2 import BitVec


@dataclass(frozen=True)
class TableConfig:
    rules: tuple[str, ...] = field(default_factory=lambda: (
        "0000001111", "1001011011", "1000101010", "1101010000", "1111000000",
        "000100100", "101101101", "111000011", "110100101", "111000010", "110101100", "100101100",
    ))
    n12_chain: bool = True


def table_rows(cfg: TableConfig):
    for text in cfg.rules:
        x = BitVec.from_str(text)
        p = profile(x)
        rep = aca.std(x)
        yield {
            "rule": text,
            "H": p.height_H,
            "FC": p.cycle_len_C,
            "C_star": criteria.cycle_divisor_rule(x),
            "lengths": ",".join(map(str, rep.cycle_spectrum)),
            "spectrum": rep.cycle_spectrum,
            "h_star": rep.h_star,
        }


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rule", action="append", help="override the rule list (repeatable)")
    ap.add_argument("--skip-chain", action="store_true")
    args = ap.parse_args(argv)
    cfg = TableConfig(tuple(args.rule)) if args.rule else TableConfig()
    if args.skip_chain:
        cfg = TableConfig(cfg.rules, n12_chain=False)

    print(f"{'rule':<12} {'H':>2} {'FC':>3} {'C*':>4}  {'lengths':<10} {'h*':>3}  spectrum")
    for row in table_rows(cfg):
        print(f"{row['rule']:<12} {row['H']:>2} {row['FC']:>3} {row['C_star']:>4}  "
              f"{row['lengths']:<10} {row['h_star']:>3}  {row['spectrum']}")

    if cfg.n12_chain:
        rep = criteria.falsify_inequality_5()
        print("\nn=12 chain X, bX, bbX")
        for f in rep.chain:
            print(f"  {f.rule}  H={f.height_H} det2={f.det2} h*={f.h_star} spectrum={f.spectrum}")
        print(f"  common kernel: {rep.common_kernel}")
        print(f"  lower bound violated: {rep.lower_bound_violated}")


if __name__ == "__main__":
    main()
