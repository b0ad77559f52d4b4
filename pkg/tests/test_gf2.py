import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baker_aca.baker import baker, boxtimes
from baker_aca.gf2 import (
    BitVec,
    GF2Matrix,
    circulant,
    det2,
    image,
    kernel_basis,
    mat_mul,
    mat_pow,
    mat_vec,
    parity,
    rank2,
    reverse,
    shift_right,
    shift_right_by,
    span,
)
from conftest import (
    all_rules,
    bitvec_pairs,
    bitvecs,
    brute_image_size,
    literal_circulant,
    literal_matmul,
    permutation_det2,
)


def test_bitvec_roundtrip_and_padding():
    v = BitVec.from_str("110101", 10)
    assert v.to_list() == [1, 1, 0, 1, 0, 1, 0, 0, 0, 0]
    assert v.bits == 0b101011
    assert str(v) == "1101010000"
    assert BitVec.from_list([1, 0, 0]) == BitVec.unit(3)
    with pytest.raises(ValueError):
        BitVec(3, 8)
    with pytest.raises(ValueError):
        BitVec.from_str("1102")
    with pytest.raises(ValueError):
        BitVec.from_list([1, 1, 1], 2)


def test_shift_right_examples():
    v = BitVec.from_list([1, 0, 1, 1, 0])
    assert shift_right(v).to_list() == [0, 1, 0, 1, 1]
    assert shift_right(BitVec.from_list([1, 0, 0])).to_list() == [0, 1, 0]


@given(bitvecs())
def test_full_rotation_is_identity(v):
    w = v
    for _ in range(v.n):
        w = shift_right(w)
    assert w == v
    assert shift_right_by(v, v.n) == v


def test_reverse_examples():
    assert reverse(BitVec.from_list([1, 1, 0])).to_list() == [0, 1, 1]
    pal = BitVec.from_list([1, 0, 1, 1, 0, 1])
    assert reverse(pal) == pal


@given(bitvecs())
def test_reverse_involution(v):
    assert reverse(reverse(v)) == v
    assert reverse(v).to_list() == v.to_list()[::-1]


def test_parity_examples():
    assert parity(BitVec.from_list([1, 1, 1])) == 1
    assert parity(BitVec.zeros(7)) == 0


@given(bitvec_pairs())
def test_parity_linear(pair):
    v, w = pair
    assert parity(v ^ w) == parity(v) ^ parity(w)


def test_circulant_examples():
    assert circulant(BitVec.from_list([1, 1, 0])).to_lists() == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert circulant(BitVec.unit(5)) == GF2Matrix.identity(5)
    assert circulant(BitVec.zeros(4)) == GF2Matrix.zeros(4)


@given(bitvecs(max_n=10))
def test_circulant_matches_literal(v):
    assert circulant(v).to_lists() == literal_circulant(v.to_list())


def test_mat_mul_identity_and_shape_errors():
    a = circulant(BitVec.from_str("10110"))
    assert GF2Matrix.identity(5) @ a == a
    with pytest.raises(ValueError):
        mat_mul(GF2Matrix.zeros(2, 3), GF2Matrix.zeros(2, 3))
    with pytest.raises(ValueError):
        mat_vec(GF2Matrix.zeros(2, 3), BitVec.zeros(2))


@settings(max_examples=200)
@given(bitvec_pairs(max_n=8))
def test_mat_mul_matches_literal(pair):
    a, b = (circulant(v) for v in pair)
    assert (a @ b).to_lists() == literal_matmul(a.to_lists(), b.to_lists())


@settings(max_examples=300)
@given(bitvec_pairs(max_n=12))
def test_circulant_product_is_circulant_of_boxtimes(pair):
    left, right = pair
    assert circulant(left) @ circulant(right) == circulant(boxtimes(left, right))


@settings(max_examples=300)
@given(bitvecs(max_n=12))
def test_circulant_square_is_circulant_of_baker(v):
    assert circulant(v) @ circulant(v) == circulant(baker(v))


def test_mat_vec_left_action():
    a = GF2Matrix.from_lists([[1, 1, 0], [0, 0, 1]])
    assert mat_vec(a, BitVec.from_list([1, 1, 1])).to_list() == [0, 1]


def test_rank_det_kernel_trivial_cases():
    for n in (1, 4, 9):
        eye = GF2Matrix.identity(n)
        assert (rank2(eye), det2(eye), kernel_basis(eye)) == (n, 1, [])
        zero = GF2Matrix.zeros(n)
        assert rank2(zero) == 0 and det2(zero) == 0
        assert len(kernel_basis(zero)) == n


def test_det_of_all_ones_circulant_n3():
    # rows of C([1,1,1]) are all equal, so they sum to zero and the rank is 1
    c = circulant(BitVec.from_list([1, 1, 1]))
    assert rank2(c) == 1
    assert det2(c) == 0


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det2(GF2Matrix.zeros(2, 3))


def test_kernel_basis_is_deterministic():
    a = circulant(BitVec.from_str("110000"))
    assert kernel_basis(a) == kernel_basis(a)
    assert [v.bits for v in kernel_basis(a)] == [0b111111]


@pytest.mark.parametrize("n", range(1, 7))
def test_det2_matches_permutation_expansion_exhaustive(n):
    for v in all_rules(n):
        c = circulant(v)
        assert det2(c) == permutation_det2(c.to_lists())


@settings(max_examples=200)
@given(st.integers(1, 7), st.data())
def test_rank_and_kernel_against_enumeration(n, data):
    rows = [data.draw(st.integers(0, (1 << n) - 1)) for _ in range(n)]
    a = GF2Matrix(n, n, tuple(rows))
    lists = a.to_lists()
    assert 1 << rank2(a) == brute_image_size(lists)
    kernel = {v for v in range(1 << n) if mat_vec(a, BitVec(n, v)).bits == 0}
    assert span(kernel_basis(a)) == kernel
    assert rank2(a) + len(kernel_basis(a)) == n


@settings(max_examples=200)
@given(bitvecs(max_n=12))
def test_rank_nullity_on_circulants(v):
    c = circulant(v)
    assert rank2(c) + len(kernel_basis(c)) == v.n
    for k in kernel_basis(c):
        assert mat_vec(c, k).bits == 0


@pytest.mark.parametrize("n", range(1, 13))
def test_det2_conserved_by_baker_exhaustive(n):
    for v in all_rules(n):
        assert det2(circulant(v)) == det2(circulant(baker(v)))


@settings(max_examples=60, deadline=None)
@given(bitvecs(min_n=2, max_n=10))
def test_images_shrink_and_kernels_grow(v):
    c = circulant(v)
    powers = [mat_pow(c, i) for i in range(6)]
    for i in range(5):
        lo, hi = powers[i], powers[i + 1]
        assert rank2(hi) <= rank2(lo)
        ker_lo = span(kernel_basis(lo))
        ker_hi = span(kernel_basis(hi))
        assert ker_lo <= ker_hi


@settings(max_examples=40, deadline=None)
@given(bitvecs(min_n=2, max_n=8))
def test_image_shrink_factor_is_kernel_meet_image(v):
    # X maps Im(X^i) onto Im(X^(i+1)) with kernel ker(X) & Im(X^i)
    c = circulant(v)
    ker = span(kernel_basis(c))
    for i in range(4):
        im_i = image(mat_pow(c, i))
        im_next = image(mat_pow(c, i + 1))
        assert len(im_next) * len(ker & im_i) == len(im_i)


def test_shrink_factor_with_kernel_of_power_fails_at_power_zero():
    # |Im X| * |ker(X^0) & Im(X^0)| = |Im X| != 2^n for any singular X
    c = circulant(BitVec.zeros(4))
    im0 = image(mat_pow(c, 0))
    im1 = image(c)
    ker0 = span(kernel_basis(mat_pow(c, 0)))
    assert len(im1) * len(ker0 & im0) != len(im0)


def test_image_small():
    a = GF2Matrix.from_lists([[1, 0], [1, 0]])
    assert image(a) == {0, 0b11}
    assert span([BitVec(3, 1), BitVec(3, 2)]) == {0, 1, 2, 3}
