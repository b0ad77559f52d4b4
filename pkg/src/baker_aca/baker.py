"""Discrete baker transformation and the arithmetic around it.

The baker map sends a leader ``L`` to the leader of ``C(L)^2``; on
components it folds ``L_j`` onto position ``2j mod n``.  Its index shadow
``i -> 2i mod n`` and the 2-adic/multiplicative-order arithmetic of ``n``
control how fast every rule settles onto a baker cycle.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from .gf2 import BitVec, GF2Matrix, _rotl, kernel_basis, span


def boxtimes(left: BitVec, right: BitVec) -> BitVec:
    """Leader product: ``circulant(left ⊠ right) == circulant(left) @ circulant(right)``.

    Computed as the cyclic convolution ``(L ⊠ M)_j = XOR_k L_k M_{j-k}``,
    one word rotation per set bit of ``left``.
    """
    if left.n != right.n:
        raise ValueError(f"length mismatch: {left.n} != {right.n}")
    n = left.n
    acc = 0
    bits = left.bits
    while bits:
        low = bits & -bits
        acc ^= _rotl(right.bits, low.bit_length() - 1, n)
        bits ^= low
    return BitVec(n, acc)


def boxtimes_all(vectors: list[BitVec]) -> BitVec:
    """Left-to-right ⊠-product of a nonempty list."""
    if not vectors:
        raise ValueError("empty product")
    acc = vectors[0]
    for v in vectors[1:]:
        acc = boxtimes(acc, v)
    return acc


def baker(vec: BitVec) -> BitVec:
    n = vec.n
    out = 0
    bits = vec.bits
    while bits:
        low = bits & -bits
        j = low.bit_length() - 1
        out ^= 1 << ((2 * j) % n)
        bits ^= low
    return BitVec(n, out)


def baker_iter(vec: BitVec, k: int) -> BitVec:
    if k < 0:
        raise ValueError("iteration count must be nonnegative")
    for _ in range(k):
        vec = baker(vec)
    return vec


def baker_matrix(n: int) -> GF2Matrix:
    """Matrix of the baker map acting on column vectors: entry (i, j) = [i == 2j mod n]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [0] * n
    for j in range(n):
        rows[(2 * j) % n] |= 1 << j
    return GF2Matrix(n, n, tuple(rows))


def index_baker(i: int, n: int) -> int:
    if not 0 <= i < n:
        raise ValueError(f"index {i} out of range for n={n}")
    return (2 * i) % n


def iota(n: int) -> int:
    """Exponent of the largest power of two dividing ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (n & -n).bit_length() - 1


def odd_part(n: int) -> int:
    return n >> iota(n)


def ord2(m: int) -> int:
    """Multiplicative order of 2 modulo odd ``m``; ``ord2(1) == 1``."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"ord2 needs an odd modulus >= 1, got {m}")
    if m == 1:
        return 1
    x, k = 2 % m, 1
    while x != 1:
        x = (2 * x) % m
        k += 1
    return k


def critical(n: int) -> int:
    """Critical number: order of 2 modulo the odd part of ``n`` (1 if that part is 1)."""
    return ord2(odd_part(n))


def critical_csv(n_max: int) -> str:
    buf = io.StringIO()
    buf.write("n,c_of_n\n")
    for n in range(1, n_max + 1):
        buf.write(f"{n},{critical(n)}\n")
    return buf.getvalue()


def is_swept(vec: BitVec) -> bool:
    step = 1 << iota(vec.n)
    return all(j % step == 0 for j in vec.support())


def compress(vec: BitVec) -> BitVec:
    """Odd-length vector of the surviving components of ``baker^iota(n) vec``."""
    k = iota(vec.n)
    swept = baker_iter(vec, k)
    step = 1 << k
    m = vec.n // step
    out = 0
    for i in range(m):
        out |= swept[i * step] << i
    return BitVec(m, out)


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@dataclass(frozen=True)
class BakerProfile:
    height_H: int
    cycle_len_C: int
    swept_form: BitVec
    compression: BitVec


def profile(rule: BitVec) -> BakerProfile:
    """Position of ``rule`` in the baker diagram, without building the diagram."""
    height = 0
    y = rule
    while not is_swept(y):
        y = baker(y)
        height += 1
    cycle_len = None
    for d in _divisors(critical(rule.n)):
        if baker_iter(y, d) == y:
            cycle_len = d
            break
    assert cycle_len is not None, "swept vector off every baker cycle"
    return BakerProfile(height, cycle_len, y, compress(rule))


def fixed_rules(n: int) -> list[BitVec]:
    """All ``X`` with ``baker(X) == X``, sorted by rule number."""
    a = baker_matrix(n) + GF2Matrix.identity(n)
    return [BitVec(n, b) for b in sorted(span(kernel_basis(a)))]
