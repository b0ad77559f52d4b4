"""Cycle/basin analysis of self-maps on ``{0, ..., N-1}``.

The baker map on rule numbers, the index map ``i -> 2i mod n`` and every
automaton's state transition diagram are all functional graphs: one out-edge
per node.  ``analyze`` decomposes such a graph in one linear pass.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Callable

import numba
import numpy as np

from .config import check_cap


@numba.njit(cache=True)
def _walk(mapping):
    n = mapping.shape[0]
    height = np.full(n, -1, dtype=np.int64)
    attractor = np.full(n, -1, dtype=np.int64)
    # 0 unvisited, 1 on the current path, 2 finished
    color = np.zeros(n, dtype=np.int8)
    pos = np.zeros(n, dtype=np.int64)
    path = np.empty(n, dtype=np.int64)
    cycle_rep = np.empty(n, dtype=np.int64)
    cycle_len = np.empty(n, dtype=np.int64)
    n_cycles = 0
    for start in range(n):
        if color[start] != 0:
            continue
        top = 0
        u = start
        while color[u] == 0:
            color[u] = 1
            pos[u] = top
            path[top] = u
            top += 1
            u = mapping[u]
        stop = top
        if color[u] == 1:
            first = pos[u]
            rep = u
            for k in range(first, top):
                v = path[k]
                height[v] = 0
                attractor[v] = n_cycles
                color[v] = 2
                if v < rep:
                    rep = v
            cycle_rep[n_cycles] = rep
            cycle_len[n_cycles] = top - first
            n_cycles += 1
            stop = first
        for k in range(stop - 1, -1, -1):
            v = path[k]
            w = mapping[v]
            height[v] = height[w] + 1
            attractor[v] = attractor[w]
            color[v] = 2
    return height, attractor, cycle_rep[:n_cycles].copy(), cycle_len[:n_cycles].copy()


@dataclass(frozen=True)
class Cycle:
    id: int
    length: int
    representative: int


@dataclass(frozen=True, eq=False)
class FunctionalGraphReport:
    """Decomposition of a self-map.

    ``height[x]`` is the number of steps from ``x`` to its cycle and
    ``attractor[x]`` the id of that cycle.  Cycle ids follow the order of
    their smallest members; a cycle's representative is that smallest member.
    """

    mapping: np.ndarray
    cycles: tuple[Cycle, ...]
    height: np.ndarray
    attractor: np.ndarray

    @property
    def node_count(self) -> int:
        return int(self.mapping.shape[0])

    @property
    def max_height(self) -> int:
        return int(self.height.max())

    @property
    def basin_sizes(self) -> dict[int, int]:
        counts = np.bincount(self.attractor, minlength=len(self.cycles))
        return {c.id: int(counts[c.id]) for c in self.cycles}

    @property
    def cycle_length_multiset(self) -> dict[int, int]:
        return dict(sorted(Counter(c.length for c in self.cycles).items()))

    @property
    def cyclic_count(self) -> int:
        return int(np.count_nonzero(self.height == 0))

    def members(self, cycle_id: int) -> list[int]:
        """Cycle members in map order, starting at the representative."""
        start = self.cycles[cycle_id].representative
        out = [start]
        x = int(self.mapping[start])
        while x != start:
            out.append(x)
            x = int(self.mapping[x])
        return out

    def basin(self, cycle_id: int) -> np.ndarray:
        return np.flatnonzero(self.attractor == cycle_id)


def analyze(f: np.ndarray | list[int] | Callable[[int], int], size: int | None = None) -> FunctionalGraphReport:
    """Analyze a self-map given as a table, or as a callable together with ``size``."""
    if callable(f):
        if size is None:
            raise ValueError("size is required when the map is a callable")
        table = np.fromiter((f(i) for i in range(size)), dtype=np.int64, count=size)
    else:
        table = np.array(f, dtype=np.int64)
    if table.ndim != 1 or table.shape[0] < 1:
        raise ValueError("map must be a nonempty 1-d table")
    if table.min() < 0 or table.max() >= table.shape[0]:
        raise ValueError("map leaves its domain")

    height, attractor, reps, lengths = _walk(table)
    order = np.argsort(reps, kind="stable")
    relabel = np.empty_like(order)
    relabel[order] = np.arange(order.shape[0])
    cycles = tuple(Cycle(i, int(lengths[k]), int(reps[k])) for i, k in enumerate(order))
    for arr in (table, height):
        arr.setflags(write=False)
    attractor = relabel[attractor]
    attractor.setflags(write=False)
    return FunctionalGraphReport(table, cycles, height, attractor)


def index_map(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    return (2 * np.arange(n, dtype=np.int64)) % n


def index_diagram(n: int) -> FunctionalGraphReport:
    return analyze(index_map(n))


def baker_map_table(n: int) -> np.ndarray:
    """Baker map on all rule numbers of length ``n`` (bit i of the number is X_i)."""
    rules = np.arange(1 << n, dtype=np.int64)
    out = np.zeros_like(rules)
    for j in range(n):
        out ^= ((rules >> j) & 1) << ((2 * j) % n)
    return out


def baker_diagram(n: int, cap: int | None = None) -> FunctionalGraphReport:
    if n < 1:
        raise ValueError("n must be >= 1")
    check_cap(n, cap, "baker diagram")
    return analyze(baker_map_table(n))


def _bits_label(x: int, n: int) -> str:
    return "".join(str((x >> i) & 1) for i in range(n))


def bitstring_labeler(n: int) -> Callable[[int], str]:
    return lambda x: _bits_label(x, n)


def export_dot(report: FunctionalGraphReport, labeler: Callable[[int], str] | None = None) -> str:
    lines = ["digraph {"]
    if labeler is not None:
        for x in range(report.node_count):
            lines.append(f'  {x} [label="{labeler(x)}"];')
    for x, y in enumerate(report.mapping.tolist()):
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_dict(report: FunctionalGraphReport, n: int | None = None, kind: str | None = None,
                sample: int = 16) -> dict:
    out: dict = {}
    if n is not None:
        out["n"] = n
    if kind is not None:
        out["map"] = kind
    out["cycles"] = [
        {"id": c.id, "length": c.length, "members_sample": report.members(c.id)[:sample]}
        for c in report.cycles
    ]
    out["cycle_length_multiset"] = {str(k): v for k, v in report.cycle_length_multiset.items()}
    out["basin_sizes"] = {str(k): v for k, v in report.basin_sizes.items()}
    out["max_height"] = report.max_height
    return out


def export_json(report: FunctionalGraphReport, n: int | None = None, kind: str | None = None) -> str:
    return json.dumps(report_dict(report, n, kind), indent=2) + "\n"
