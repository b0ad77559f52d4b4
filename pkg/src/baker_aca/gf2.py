"""Bit-packed GF(2) vectors and matrices.

Vectors and matrix rows are stored as Python ints, bit ``i`` holding
component ``i``.  Everything here is exact and pure: no operation mutates
its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def _mask(n: int) -> int:
    return (1 << n) - 1


def _rotl(bits: int, k: int, n: int) -> int:
    k %= n
    if k == 0:
        return bits
    return ((bits << k) | (bits >> (n - k))) & _mask(n)


@dataclass(frozen=True)
class BitVec:
    """Fixed-length vector over GF(2).

    ``bits`` packs the components LSB-first, so ``BitVec(n, k).bits == k``
    is also the rule number of the vector.
    """

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"BitVec length must be >= 1, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits} do not fit in length {self.n}")

    @classmethod
    def from_list(cls, values: Sequence[int], n: int | None = None) -> BitVec:
        """Build from components; with ``n`` the vector is zero-padded on the right."""
        length = len(values) if n is None else n
        if len(values) > length:
            raise ValueError(f"{len(values)} components do not fit in length {length}")
        bits = 0
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"component {i} is {v!r}, expected 0 or 1")
            bits |= v << i
        return cls(length, bits)

    @classmethod
    def from_str(cls, text: str, n: int | None = None) -> BitVec:
        text = text.strip().replace(",", "").replace(" ", "")
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        return cls.from_list([int(c) for c in text], n)

    @classmethod
    def zeros(cls, n: int) -> BitVec:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitVec:
        return cls(n, _mask(n))

    @classmethod
    def unit(cls, n: int) -> BitVec:
        """The identity rule I = [1, 0, ..., 0]."""
        return cls(n, 1)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not -self.n <= i < self.n:
            raise IndexError(i)
        return (self.bits >> (i % self.n)) & 1

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(self.n))

    def __xor__(self, other: BitVec) -> BitVec:
        _check_len(self, other)
        return BitVec(self.n, self.bits ^ other.bits)

    def __and__(self, other: BitVec) -> BitVec:
        _check_len(self, other)
        return BitVec(self.n, self.bits & other.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)

    def to_list(self) -> list[int]:
        return list(self)

    def support(self) -> list[int]:
        return [i for i in range(self.n) if (self.bits >> i) & 1]

    def weight(self) -> int:
        return self.bits.bit_count()


def _check_len(a: BitVec, b: BitVec) -> None:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")


def shift_right(v: BitVec) -> BitVec:
    """Cyclic shift right: [a0, ..., a_{n-1}] -> [a_{n-1}, a0, ..., a_{n-2}]."""
    return BitVec(v.n, _rotl(v.bits, 1, v.n))


def shift_right_by(v: BitVec, k: int) -> BitVec:
    return BitVec(v.n, _rotl(v.bits, k, v.n))


def reverse(v: BitVec) -> BitVec:
    out = 0
    for i in v.support():
        out |= 1 << (v.n - 1 - i)
    return BitVec(v.n, out)


def parity(v: BitVec) -> int:
    return v.bits.bit_count() & 1


@dataclass(frozen=True)
class GF2Matrix:
    """Dense matrix over GF(2); ``data[i]`` packs row ``i`` with column ``j`` at bit ``j``."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"bad shape {self.rows}x{self.cols}")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        if any(not 0 <= r < limit for r in self.data):
            raise ValueError("row entries exceed column count")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> GF2Matrix:
        rows = [BitVec.from_list(r) for r in entries]
        cols = rows[0].n
        if any(r.n != cols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), cols, tuple(r.bits for r in rows))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> GF2Matrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * rows)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.data[i])

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_list() for i in range(self.rows)]

    def transpose(self) -> GF2Matrix:
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return GF2Matrix(self.cols, self.rows, tuple(out))

    def __add__(self, other: GF2Matrix) -> GF2Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return GF2Matrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        return mat_mul(self, other)


def circulant(leader: BitVec) -> GF2Matrix:
    """Circulant whose (0-based) row ``i`` is the leader shifted right ``i`` times."""
    n = leader.n
    return GF2Matrix(n, n, tuple(_rotl(leader.bits, i, n) for i in range(n)))


def mat_mul(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for r in a.data:
        acc = 0
        while r:
            low = r & -r
            acc ^= b.data[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return GF2Matrix(a.rows, b.cols, tuple(out))


def mat_vec(a: GF2Matrix, v: BitVec) -> BitVec:
    """Left action ``a * v`` on a column vector."""
    if a.cols != v.n:
        raise ValueError(f"cannot apply {a.rows}x{a.cols} matrix to length-{v.n} vector")
    out = 0
    for i, r in enumerate(a.data):
        out |= ((r & v.bits).bit_count() & 1) << i
    return BitVec(a.rows, out)


def mat_pow(a: GF2Matrix, k: int) -> GF2Matrix:
    if not a.is_square:
        raise ValueError("matrix power needs a square matrix")
    if k < 0:
        raise ValueError("negative power")
    result = GF2Matrix.identity(a.rows)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def _eliminate(a: GF2Matrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns).

    The pivot for each column is the first row at or below the current one
    with a nonzero entry, so results are reproducible.
    """
    work = list(a.data)
    pivots: list[int] = []
    r = 0
    for col in range(a.cols):
        bit = 1 << col
        pivot = next((i for i in range(r, a.rows) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(a.rows):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == a.rows:
            break
    return work, pivots


def rank2(a: GF2Matrix) -> int:
    return len(_eliminate(a)[1])


def det2(a: GF2Matrix) -> int:
    if not a.is_square:
        raise ValueError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    return int(rank2(a) == a.rows)


def kernel_basis(a: GF2Matrix) -> list[BitVec]:
    """Basis of {v : a v = 0}, one vector per free column in increasing order."""
    work, pivots = _eliminate(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, pc in enumerate(pivots):
            if (work[row] >> free) & 1:
                v |= 1 << pc
        basis.append(BitVec(a.cols, v))
    return basis


def span(basis: Iterable[BitVec]) -> set[int]:
    """All packed vectors in the span of ``basis`` (exponential; small use only)."""
    out = {0}
    for b in basis:
        out |= {x ^ b.bits for x in out}
    return out


def image(a: GF2Matrix) -> set[int]:
    """Column space of ``a`` as packed vectors."""
    t = a.transpose()
    return span(t.row(j) for j in range(t.rows))
