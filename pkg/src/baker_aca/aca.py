"""Additive cellular automata on a cylinder of ``n`` cells, by brute force.

A rule ``X`` updates cell ``i`` to ``XOR_j X_j s_{i+j}`` (the cell and its
right neighbours, indices mod ``n``), which is the circulant ``C(X)``
acting on the state from the left.  ``std`` tabulates that map on all
``2**n`` states and hands it to :func:`fungraph.analyze`; everything in
:mod:`criteria` is checked against these reports.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import fungraph
from .baker import baker
from .config import check_cap
from .gf2 import BitVec, _rotl, circulant, det2


def _check(rule: BitVec, state: BitVec) -> None:
    if rule.n != state.n:
        raise ValueError(f"rule length {rule.n} != state length {state.n}")


def apply(rule: BitVec, state: BitVec) -> BitVec:
    _check(rule, state)
    n = rule.n
    out = 0
    bits = rule.bits
    while bits:
        low = bits & -bits
        # s'_i picks up s_{i+j}: rotate the state left by j positions
        out ^= _rotl(state.bits, n - (low.bit_length() - 1), n)
        bits ^= low
    return BitVec(n, out)


def apply_power(rule: BitVec, state: BitVec, k: int) -> BitVec:
    if k < 0:
        raise ValueError("power must be nonnegative")
    _check(rule, state)
    for _ in range(k):
        state = apply(rule, state)
    return state


def transition_table(rule: BitVec) -> np.ndarray:
    """Next state for every state number, vectorized over the whole cube."""
    n = rule.n
    states = np.arange(1 << n, dtype=np.int64)
    mask = (1 << n) - 1
    out = np.zeros_like(states)
    for j in rule.support():
        if j == 0:
            out ^= states
        else:
            out ^= ((states >> j) | (states << (n - j))) & mask
    return out


@dataclass(frozen=True)
class StdReport:
    n: int
    rule: BitVec
    h_star: int
    cycle_spectrum: dict[int, int]
    cyclic_state_count: int
    zero_basin_size: int
    det2: int


def diagram(rule: BitVec, cap: int | None = None) -> fungraph.FunctionalGraphReport:
    check_cap(rule.n, cap, "state transition diagram")
    return fungraph.analyze(transition_table(rule))


def std(rule: BitVec, cap: int | None = None) -> StdReport:
    report = diagram(rule, cap)
    zero_cycle = int(report.attractor[0])
    return StdReport(
        n=rule.n,
        rule=rule,
        h_star=report.max_height,
        cycle_spectrum=report.cycle_length_multiset,
        cyclic_state_count=report.cyclic_count,
        zero_basin_size=report.basin_sizes[zero_cycle],
        det2=det2(circulant(rule)),
    )


def height(rule: BitVec, cap: int | None = None) -> int:
    return std(rule, cap).h_star


def zero_basin(rule: BitVec, cap: int | None = None) -> set[BitVec]:
    """States that eventually reach the zero state, by reverse BFS from zero."""
    check_cap(rule.n, cap, "state transition diagram")
    table = transition_table(rule)
    order = np.argsort(table, kind="stable")
    starts = np.searchsorted(table[order], np.arange(table.shape[0] + 1))
    seen = {0}
    queue = deque([0])
    while queue:
        y = queue.popleft()
        for x in order[starts[y]:starts[y + 1]].tolist():
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return {BitVec(rule.n, x) for x in seen}


def monotonicity_violations(n: int, cap: int | None = None) -> list[tuple[BitVec, str]]:
    """Rules ``X`` where max cycle length or h* grows from ``X`` to ``baker(X)``.

    Exhaustive over all rules of length ``n``; checking every edge of the
    baker diagram covers every chain.
    """
    check_cap(n, cap, "rule space")
    cache: dict[int, StdReport] = {}

    def get(x: BitVec) -> StdReport:
        if x.bits not in cache:
            cache[x.bits] = std(x, cap)
        return cache[x.bits]

    bad = []
    for num in range(1 << n):
        x = BitVec(n, num)
        a, b = get(x), get(baker(x))
        if max(b.cycle_spectrum) > max(a.cycle_spectrum):
            bad.append((x, "max cycle length"))
        if b.h_star > a.h_star:
            bad.append((x, "h*"))
    return bad
