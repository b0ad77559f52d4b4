"""Command line entry point: ``baker-aca <subcommand>``.

Exit codes: 0 success, 1 usage error, 2 cap/budget exceeded, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import aca, criteria, fungraph
from .baker import critical, iota
from .config import CapExceeded, Limits
from .gf2 import BitVec
from .verify import run_verify

EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_rule(n: int, bits: str | None = None, number: int | None = None) -> BitVec:
    """Bitstring (X_0 first, right-padded to ``n``) or LSB-first rule number."""
    if n < 1:
        raise UsageError("n must be >= 1")
    if (bits is None) == (number is None):
        raise UsageError("give exactly one of --rule or --num")
    if bits is not None:
        if len(bits) > n:
            raise UsageError(f"rule {bits!r} is longer than n={n}")
        try:
            return BitVec.from_str(bits, n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if not 0 <= number < (1 << n):
        raise UsageError(f"rule number {number} out of range for n={n}")
    return BitVec(n, number)


def rule_number(rule: BitVec) -> int:
    return rule.bits


def format_spectrum(spectrum: dict[int, int]) -> str:
    return ";".join(f"{length}:{count}" for length, count in sorted(spectrum.items()))


def analyze_rule(rule: BitVec, exact: bool = False, cap: int | None = None) -> dict:
    pred = criteria.predict(rule)
    out = {
        "n": rule.n,
        "rule": str(rule),
        "rule_number": rule_number(rule),
        "det2": pred.det2_pred,
        "H": pred.height_H,
        "FC": pred.cycle_len_C,
        "bounds": {
            "h_star_upper_global": pred.h_star_upper_global,
            "h_star_upper_rule": pred.h_star_upper_rule,
            "cycle_divisor_global": pred.cycle_divisor_global,
            "cycle_divisor_rule": pred.cycle_divisor_rule,
        },
        "criteria": {
            "h_star_is_zero": bool(pred.det2_pred),
            "h_star_is_one": pred.h_star_is_one_pred,
            "is_baker_fixed_point": pred.is_baker_fixed_point,
            "in_zero_baker_basin": pred.in_zero_baker_basin,
        },
    }
    if exact:
        rep = aca.std(rule, cap)
        respected = (
            rep.h_star <= pred.h_star_upper_rule <= pred.h_star_upper_global
            and all(pred.cycle_divisor_rule % m == 0 for m in rep.cycle_spectrum)
        )
        out["exact"] = {
            "h_star": rep.h_star,
            "cycle_spectrum": {str(k): v for k, v in rep.cycle_spectrum.items()},
            "zero_basin_size": rep.zero_basin_size,
            "det2_gauss": rep.det2,
            "bounds_respected": respected,
        }
    return out


SWEEP_COLUMNS = [
    "rule_number", "rule", "det2", "H", "FC", "h_star", "spectrum",
    "det2_via_boxtimes", "h_star_is_one", "is_baker_fixed_point", "in_zero_baker_basin",
]


def sweep_rows(n: int):
    for num in range(1 << n):
        x = BitVec(n, num)
        rep = aca.std(x, cap=max(n, Limits().sweep_max))
        pred = criteria.predict(x)
        yield {
            "rule_number": num,
            "rule": str(x),
            "det2": rep.det2,
            "H": pred.height_H,
            "FC": pred.cycle_len_C,
            "h_star": rep.h_star,
            "spectrum": format_spectrum(rep.cycle_spectrum),
            "det2_via_boxtimes": pred.det2_pred,
            "h_star_is_one": int(pred.h_star_is_one_pred),
            "is_baker_fixed_point": int(pred.is_baker_fixed_point),
            "in_zero_baker_basin": int(pred.in_zero_baker_basin),
        }


def _write_csv(columns: list[str], rows, out_path: str | None) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    text = buf.getvalue()
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
        return ""
    return text


def critical_rows(n_max: int):
    for n in range(1, n_max + 1):
        yield {"n": n, "iota": iota(n), "c_of_n": critical(n), "c_star": criteria.cycle_divisor_global(n)}


def _cmd_analyze(args) -> int:
    rule = parse_rule(args.n, args.rule, args.num)
    print(json.dumps(analyze_rule(rule, args.exact), indent=2))
    return 0


def _cmd_sweep(args) -> int:
    limit = Limits().sweep_max
    if args.n > limit:
        raise CapExceeded(f"sweep over 2**{args.n} rules x 2**{args.n} states exceeds the budget n <= {limit}")
    if args.n < 1:
        raise UsageError("n must be >= 1")
    sys.stdout.write(_write_csv(SWEEP_COLUMNS, sweep_rows(args.n), args.out))
    return 0


def _cmd_diagram(args, kind: str) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    if kind == "baker":
        report = fungraph.baker_diagram(args.n)
        labeler = fungraph.bitstring_labeler(args.n) if args.labels else None
    else:
        limit = Limits().index_max
        if args.n > limit:
            raise CapExceeded(f"index diagram n={args.n} exceeds the limit {limit}")
        report = fungraph.index_diagram(args.n)
        labeler = None
    if args.format == "json":
        text = fungraph.export_json(report, args.n, kind)
    else:
        text = fungraph.export_dot(report, labeler)
    sys.stdout.write(text)
    return 0


def _cmd_critical(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    sys.stdout.write(_write_csv(["n", "iota", "c_of_n", "c_star"], critical_rows(args.max), args.out))
    return 0


def _cmd_verify(args) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if args.n_max > Limits().sweep_max:
        raise CapExceeded(f"verification over n <= {args.n_max} exceeds the budget n <= {Limits().sweep_max}")
    echo = (lambda line: print(line, file=sys.stderr)) if args.progress else None
    results = run_verify(args.n_max, echo=echo)
    for res in results:
        print(res.line())
        for detail in res.failures[:5]:
            print(f"    {detail}")
    ok = all(res.passed for res in results)
    print("ALL SUITES PASS" if ok else "VERIFICATION MISMATCH")
    return 0 if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="baker-aca", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="baker-calculus predictions for one rule")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rule", help="bitstring, X_0 first; right-padded to n")
    p.add_argument("--num", type=int, help="rule number, bit i = X_i")
    p.add_argument("--exact", action="store_true", help="also enumerate the STD")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("sweep", help="CSV over every rule of length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sweep)

    for name, kind in (("baker-diagram", "baker"), ("index-diagram", "index")):
        p = sub.add_parser(name, help=f"{kind} map diagram as DOT or JSON")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=["dot", "json"], default="json")
        p.add_argument("--labels", action="store_true", help="bitstring node labels (baker, DOT)")
        p.set_defaults(func=lambda a, kind=kind: _cmd_diagram(a, kind))

    p = sub.add_parser("critical", help="CSV of iota(2,n), c(n), c*(n)")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_critical)

    p = sub.add_parser("verify", help="run every prediction-vs-oracle suite")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"baker-aca: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"baker-aca: error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
