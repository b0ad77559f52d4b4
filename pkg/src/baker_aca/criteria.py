"""Predictions about an automaton read off the baker calculus alone.

Nothing in this module enumerates states: each function works on the rule
vector with the baker map and the leader product.  ``falsify_inequality_5``
is the exception: it needs true heights and so runs the automata.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable

from . import aca
from .baker import (
    baker,
    baker_iter,
    boxtimes,
    boxtimes_all,
    compress,
    critical,
    iota,
    profile,
)
from .gf2 import BitVec, circulant, det2, kernel_basis, parity, reverse, shift_right, span


def h_star_upper_global(n: int) -> int:
    return 1 << iota(n)


def h_star_upper_rule(rule: BitVec) -> int:
    return 1 << profile(rule).height_H


def cycle_divisor_global(n: int) -> int:
    return (1 << iota(n)) * ((1 << critical(n)) - 1)


def cycle_divisor_rule(rule: BitVec) -> int:
    p = profile(rule)
    return (1 << p.height_H) * ((1 << p.cycle_len_C) - 1)


def settled_product(rule: BitVec) -> BitVec:
    """⊠ of ``baker^(iota(n)+i) rule`` for ``i = 0 .. c(n)-1``, left to right.

    This is the leader of ``C(rule)`` raised to the universal cycle divisor.
    """
    n = rule.n
    y = baker_iter(rule, iota(n))
    terms = [y]
    for _ in range(critical(n) - 1):
        y = baker(y)
        terms.append(y)
    return boxtimes_all(terms)


def det2_via_boxtimes(rule: BitVec) -> int:
    return int(settled_product(rule) == BitVec.unit(rule.n))


def h_star_is_one(rule: BitVec) -> bool:
    p = settled_product(rule)
    return boxtimes(p, rule) == rule and p != BitVec.unit(rule.n)


def fixed_point_characterization(rule: BitVec) -> bool:
    return baker(rule) == rule


@dataclass(frozen=True)
class IdempotenceBounds:
    q: int
    r: int
    h_bound: int
    cycle_bound: int


def eventually_idempotent_consequences(rule: BitVec, q: int | None = None, r: int | None = None) -> IdempotenceBounds:
    """Bounds implied by ``baker^q X == baker^r X`` (q > r >= 0).

    Without ``q``/``r`` the minimal pair along the baker orbit is used.
    """
    if q is None or r is None:
        seen: dict[BitVec, int] = {}
        y, k = rule, 0
        while y not in seen:
            seen[y] = k
            y = baker(y)
            k += 1
        q, r = k, seen[y]
    elif not q > r >= 0:
        raise ValueError(f"need q > r >= 0, got q={q}, r={r}")
    elif baker_iter(rule, q) != baker_iter(rule, r):
        raise ValueError(f"baker^{q} X != baker^{r} X for this rule")
    return IdempotenceBounds(q, r, 1 << r, (1 << r) * ((1 << (q - r)) - 1))


def zero_basin_test(rule: BitVec) -> Callable[[BitVec], bool]:
    """Membership test for the basin of zero in the rule's STD.

    ``s`` reaches zero iff ``s ⊠ shift_right(reverse(Z)) == 0`` with
    ``Z = baker^iota(n) rule``; ``Z`` is computed once per rule.
    """
    z = baker_iter(rule, iota(rule.n))
    probe = shift_right(reverse(z))

    def test(state: BitVec) -> bool:
        if state.n != rule.n:
            raise ValueError(f"state length {state.n} != rule length {rule.n}")
        return boxtimes(state, probe).bits == 0

    return test


def zero_basin_membership(state: BitVec, rule: BitVec) -> bool:
    return zero_basin_test(rule)(state)


def rule_in_zero_baker_basin(rule: BitVec) -> bool:
    return baker_iter(rule, iota(rule.n)).bits == 0


def rule_in_fixed_point_basin(rule: BitVec, target: BitVec) -> bool:
    if baker(target) != target:
        raise ValueError(f"{target} is not a baker fixed point")
    return baker_iter(rule, iota(rule.n)) == target


def det_reduction(rule: BitVec) -> int:
    """det2 of C(rule) computed on the odd-length compressed rule."""
    small = compress(rule)
    if small.n == 1:
        return small.bits
    return det2(circulant(small))


@dataclass(frozen=True)
class PredictionReport:
    n: int
    rule: BitVec
    height_H: int
    cycle_len_C: int
    h_star_upper_global: int
    h_star_upper_rule: int
    cycle_divisor_global: int
    cycle_divisor_rule: int
    det2_pred: int
    h_star_is_one_pred: bool
    is_baker_fixed_point: bool
    in_zero_baker_basin: bool


def predict(rule: BitVec) -> PredictionReport:
    n = rule.n
    p = profile(rule)
    return PredictionReport(
        n=n,
        rule=rule,
        height_H=p.height_H,
        cycle_len_C=p.cycle_len_C,
        h_star_upper_global=h_star_upper_global(n),
        h_star_upper_rule=1 << p.height_H,
        cycle_divisor_global=cycle_divisor_global(n),
        cycle_divisor_rule=(1 << p.height_H) * ((1 << p.cycle_len_C) - 1),
        det2_pred=det2_via_boxtimes(rule),
        h_star_is_one_pred=h_star_is_one(rule),
        is_baker_fixed_point=fixed_point_characterization(rule),
        in_zero_baker_basin=rule_in_zero_baker_basin(rule),
    )


@dataclass(frozen=True)
class RuleFacts:
    rule: BitVec
    height_H: int
    det2: int
    h_star: int
    spectrum: dict[int, int]
    kernel: frozenset[int]


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of testing 2^(H-1)(1-det2) <= h* <= 2^H (1-det2) on a baker chain."""

    chain: tuple[RuleFacts, ...]
    # (rule, "lower"|"upper", bound, value); lower entries hold doubled bound and h*
    violations: tuple[tuple[BitVec, str, int, int], ...]
    common_kernel: bool

    @property
    def lower_bound_violated(self) -> bool:
        return any(kind == "lower" for _, kind, _, _ in self.violations)


COUNTEREXAMPLE_RULE = BitVec.from_list([1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0])


def falsify_inequality_5(rule: BitVec = COUNTEREXAMPLE_RULE, steps: int = 3) -> InequalityReport:
    """Check the two-sided height bound along ``rule, baker(rule), ...``.

    With the default n=12 rule the chain has baker heights 2, 1, 0, all three
    automata have h* = 1, and the lower bound fails at the first rule.
    """
    chain = []
    x = rule
    for _ in range(steps):
        report = aca.std(x)
        kernel = frozenset(b.bits for b in kernel_basis(circulant(x)))
        chain.append(RuleFacts(x, profile(x).height_H, report.det2, report.h_star,
                               report.cycle_spectrum, kernel))
        x = baker(x)
    violations = []
    for f in chain:
        free = 1 - f.det2
        upper = (1 << f.height_H) * free
        # lower bound is upper / 2; compare doubled to stay in integers
        if 2 * f.h_star < upper:
            violations.append((f.rule, "lower", upper, 2 * f.h_star))
        if f.h_star > upper:
            violations.append((f.rule, "upper", upper, f.h_star))
    # compare kernels as subspaces, through their spans
    spans = [span(BitVec(rule.n, b) for b in f.kernel) for f in chain]
    common = all(s == spans[0] for s in spans)
    return InequalityReport(tuple(chain), tuple(violations), common)


def det2_gauss(rule: BitVec) -> int:
    """Gaussian-elimination determinant of the rule's circulant (oracle side)."""
    return det2(circulant(rule))


def odd_height_prediction(rule: BitVec) -> int:
    """h* on an odd cylinder: 1 - det2."""
    if rule.n % 2 == 0:
        raise ValueError("only defined for odd n")
    return 1 - det2_gauss(rule)


def even_parity_forces_height_one(rule: BitVec) -> bool:
    """Odd n with even-parity rule implies h* = 1."""
    return rule.n % 2 == 1 and parity(rule) == 0


def spectrum_lcm(spectrum: dict[int, int]) -> int:
    return lcm(*spectrum)
