"""Exhaustive cross-checks of every baker-calculus prediction against brute force.

Each suite pairs a prediction computed from the rule vector alone with a
quantity read off the explicitly enumerated state transition diagram (or
Gaussian elimination).  The two sides share no intermediate results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import aca, criteria, fungraph
from .baker import baker, baker_iter, critical, iota, profile
from .gf2 import BitVec, circulant, det2, parity, rank2

MAX_FAILURE_DETAILS = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, detail: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail())

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<46} checked={self.checked:<9} failures={len(self.failures):<4} {status}"


SUITES = [
    "odd n: h* = 1 - det2",
    "odd n, even parity: h* = 1",
    "det2 via boxtimes = Gaussian det2 = [h*=0]",
    "h_star_is_one <=> h* = 1",
    "cycle lengths | C*(n,X) | c*(n)",
    "h* <= 2^H <= 2^iota",
    "baker fixed point <=> fixed attractors",
    "baker basin of zero => single attractor 0",
    "det2 conservation under baker",
    "rank series nonincreasing, min at iota",
    "determinant reduction",
    "eventual baker periodicity",
    "profile = baker diagram height/attractor",
    "operator power law",
    "zero basin equation = reverse BFS",
    "n=12 chain breaks the lower height bound",
]


def _compose_power(table: np.ndarray, k: int) -> np.ndarray:
    out = np.arange(table.shape[0], dtype=table.dtype)
    for _ in range(k):
        out = table[out]
    return out


def run_verify(n_max: int, zero_basin_max: int = 10, power_max: int = 10,
               echo: Callable[[str], None] | None = None) -> list[SuiteResult]:
    results = {name: SuiteResult(name) for name in SUITES}
    r = results.__getitem__

    for n in range(1, n_max + 1):
        bdiag = fungraph.baker_diagram(n, cap=max(n, 22))
        cstar = criteria.cycle_divisor_global(n)
        k = iota(n)
        for num in range(1 << n):
            x = BitVec(n, num)
            graph = aca.diagram(x, cap=max(n, 22))
            h = graph.max_height
            lengths = sorted(graph.cycle_length_multiset)
            gauss = det2(circulant(x))
            pred = criteria.predict(x)
            label = lambda: f"n={n} rule={x}"  # noqa: E731

            if n % 2:
                r(SUITES[0]).check(h == 1 - gauss, label)
                if parity(x) == 0:
                    r(SUITES[1]).check(h == 1, label)
            r(SUITES[2]).check(pred.det2_pred == gauss == int(h == 0), label)
            r(SUITES[3]).check(pred.h_star_is_one_pred == (h == 1), label)
            r(SUITES[4]).check(
                all(pred.cycle_divisor_rule % m == 0 for m in lengths)
                and cstar % pred.cycle_divisor_rule == 0,
                lambda: f"{label()} lengths={lengths} C*={pred.cycle_divisor_rule}",
            )
            r(SUITES[5]).check(h <= pred.h_star_upper_rule <= pred.h_star_upper_global, label)
            rhs = lengths == [1] and (x == BitVec.unit(n) or h == 1)
            r(SUITES[6]).check(pred.is_baker_fixed_point == rhs, label)
            if pred.in_zero_baker_basin:
                r(SUITES[7]).check(len(graph.cycles) == 1 and graph.cycles[0].representative == 0, label)
            r(SUITES[8]).check(gauss == det2(circulant(baker(x))), label)
            ranks = [rank2(circulant(baker_iter(x, i))) for i in range(k + critical(n) + 1)]
            r(SUITES[9]).check(
                all(a >= b for a, b in zip(ranks, ranks[1:])) and ranks[k] == min(ranks),
                lambda: f"{label()} ranks={ranks}",
            )
            r(SUITES[10]).check(criteria.det_reduction(x) == gauss, label)
            r(SUITES[11]).check(baker_iter(x, k + critical(n)) == baker_iter(x, k), label)
            p = profile(x)
            cyc = bdiag.cycles[int(bdiag.attractor[num])]
            r(SUITES[12]).check(
                p.height_H == int(bdiag.height[num]) and p.cycle_len_C == cyc.length, label
            )
            if n <= power_max:
                table = graph.mapping
                for i in range(4):
                    lhs = _compose_power(table, 1 << i)
                    rhs_table = aca.transition_table(baker_iter(x, i))
                    r(SUITES[13]).check(bool(np.array_equal(lhs, rhs_table)), lambda: f"{label()} i={i}")
            if n <= zero_basin_max:
                basin = graph.attractor == graph.attractor[0]
                test = criteria.zero_basin_test(x)
                for s in range(1 << n):
                    r(SUITES[14]).check(test(BitVec(n, s)) == bool(basin[s]), lambda: f"{label()} s={s}")
        if echo is not None:
            echo(f"n={n}: {1 << n} rules checked")

    if n_max >= 12:
        rep = criteria.falsify_inequality_5()
        heights = [f.height_H for f in rep.chain]
        r(SUITES[15]).check(
            rep.lower_bound_violated and rep.common_kernel and heights == [2, 1, 0]
            and all(f.h_star == 1 for f in rep.chain),
            lambda: f"heights={heights} violations={rep.violations}",
        )
    return [res for res in results.values() if res.checked]
