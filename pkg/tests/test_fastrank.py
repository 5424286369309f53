import random
from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nonassoc.fastrank import (
    PRIME,
    certified_nullspace,
    certified_rank,
    certified_rowspace,
)
from nonassoc.linalg import Matrix, nullspace, rref


def _blocks_of(arr, step):
    def source():
        return [arr[i:i + step] for i in range(0, len(arr), step)]
    return source


def exact_rank(arr):
    return rref(Matrix.from_rows([[int(x) for x in row] for row in arr])).rank


def test_prime_is_prime_and_small_enough():
    assert sympy.isprime(PRIME)
    # the float64 filter needs cols * (p-1)^2 < 2^53 for exact accumulation
    assert 8192 * (PRIME - 1) ** 2 < 2 ** 53


def test_certified_rank_random_matrices():
    rng = random.Random(3)
    for _ in range(30):
        rows = rng.randint(1, 12)
        cols = rng.randint(1, 10)
        arr = np.array(
            [[rng.randint(-50, 50) for _ in range(cols)] for _ in range(rows)],
            dtype=np.int64)
        assert certified_rank(cols, _blocks_of(arr, 4)) == exact_rank(arr)


def test_certified_rank_survives_modular_false_zeros():
    # rows that vanish mod PRIME but not over the rationals
    arr = np.array([
        [PRIME, 0, 0],
        [0, PRIME, PRIME],
        [2 * PRIME, 3 * PRIME, 0],
    ], dtype=np.int64)
    assert certified_rank(3, _blocks_of(arr, 2)) == 3


def test_certified_rank_modular_rank_drop():
    # second row is PRIME times the first: dependent mod p, independent exactly
    arr = np.array([[1, 2], [PRIME, 2 * PRIME + 1]], dtype=np.int64)
    assert certified_rank(2, _blocks_of(arr, 1)) == 2


def test_certified_nullspace_annihilates():
    rng = random.Random(5)
    for _ in range(15):
        cols = rng.randint(1, 7)
        arr = np.array(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(10)],
            dtype=np.int64)
        rank, null = certified_nullspace(cols, _blocks_of(arr, 3))
        assert rank == exact_rank(arr)
        assert null.rank == cols - rank
        m = Matrix.from_rows([[int(x) for x in row] for row in arr])
        for vec in null.rows:
            assert m.mul_vec(vec) == [Fraction(0)] * m.rows


def test_certified_rowspace_equals_exact_row_space():
    rng = random.Random(9)
    for _ in range(15):
        cols = rng.randint(1, 7)
        arr = np.array(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(8)],
            dtype=np.int64)
        rank, basis = certified_rowspace(cols, _blocks_of(arr, 3))
        oracle = rref(Matrix.from_rows([[int(x) for x in r] for r in arr]))
        assert rank == oracle.rank == basis.rank
        for row in arr:
            assert basis.contains([int(x) for x in row])
        for row in basis.rows:
            assert oracle.contains(row)


def test_block_partition_irrelevant():
    arr = np.array(
        [[(-1) ** (i + j) * (i * 7 + j) for j in range(6)] for i in range(9)],
        dtype=np.int64)
    want = exact_rank(arr)
    for step in (1, 2, 3, 9):
        assert certified_rank(6, _blocks_of(arr, step)) == want


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-1000, 1000), min_size=4, max_size=4),
                min_size=1, max_size=10))
def test_certified_rank_agrees_with_fraction_oracle(rows):
    arr = np.array(rows, dtype=np.int64)
    assert certified_rank(4, _blocks_of(arr, 3)) == exact_rank(arr)
