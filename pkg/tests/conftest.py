import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from baker_aca.gf2 import BitVec


@st.composite
def bitvecs(draw, min_n=1, max_n=16, n=None):
    n = draw(st.integers(min_n, max_n)) if n is None else n
    return BitVec(n, draw(st.integers(0, (1 << n) - 1)))


@st.composite
def bitvec_pairs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    word = st.integers(0, (1 << n) - 1)
    return BitVec(n, draw(word)), BitVec(n, draw(word))


@pytest.fixture
def rng():
    return np.random.default_rng(20240515)


def all_rules(n):
    return (BitVec(n, k) for k in range(1 << n))


# Literal list-based definitions, kept independent of the packed implementation.

def literal_circulant(leader):
    n = len(leader)
    return [[leader[(j - i) % n] for j in range(n)] for i in range(n)]


def literal_matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) % 2 for j in range(len(b[0]))]
            for i in range(len(a))]


def literal_boxtimes(left, right):
    """Leader product in its reversed-and-shifted form."""
    n = len(left)
    rev = right[::-1]
    return [sum(left[k] * rev[(k - j - 1) % n] for k in range(n)) % 2 for j in range(n)]


def literal_baker(vec):
    n = len(vec)
    out = []
    for i in range(n):
        pre = [j for j in range(n) if (2 * j) % n == i]
        out.append(sum(vec[j] for j in pre) % 2 if pre else 0)
    return out


def literal_apply(rule, state):
    n = len(rule)
    return [sum(rule[j] * state[(i + j) % n] for j in range(n)) % 2 for i in range(n)]


def permutation_det2(matrix):
    """det mod 2 by full permutation expansion (small n only)."""
    n = len(matrix)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term &= matrix[i][j]
            if not term:
                break
        total ^= term
    return total


def brute_image_size(matrix):
    n = len(matrix[0])
    images = set()
    for v in itertools.product((0, 1), repeat=n):
        images.add(tuple(sum(r[k] * v[k] for k in range(n)) % 2 for r in matrix))
    return len(images)
