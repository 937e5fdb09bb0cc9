"""
Tests for the vectorized F_p kernels against the exact implementation.
"""
import numpy as np

from src.application.census.kernels import (
    all_vectors,
    coefficient_block,
    det_mod_batch,
    f1_batch,
    f2_gram_batch,
    kernel_matrix,
    legendre_table,
    phi_batch,
    points_block,
    quadratic_values,
)
from src.domain.invariants.relative import f1_value, f2_gram
from src.domain.scalars.fields import prime_field
from src.domain.wedge.contraction import contract_psi
from src.domain.wedge.trivector import TriVector


def test_kernel_rows_contract_to_zero():
    p = 5
    kernel = kernel_matrix(p)
    assert kernel.shape == (14, 20)
    ctx = prime_field(p)
    for row in kernel:
        assert all(c == 0 for c in contract_psi(TriVector(ctx, [int(a) for a in row])))


def test_coefficient_digits():
    assert coefficient_block(3, 0, 4, 2).tolist() == [[0, 0], [1, 0], [2, 0], [0, 1]]
    assert all_vectors(3, 2).shape == (9, 2)


def test_batches_match_exact_invariants():
    p = 7
    ctx = prime_field(p)
    points = points_block(kernel_matrix(p), p, 1000, 1040)
    f1 = f1_batch(points, p)
    grams = f2_gram_batch(phi_batch(points, p), p)
    for k in range(points.shape[0]):
        x = TriVector(ctx, [int(a) for a in points[k]])
        assert f1_value(x) == int(f1[k])
        exact = f2_gram(x)
        assert all(exact[r][c] == int(grams[k, r, c]) for r in range(6) for c in range(6))


def test_determinants_mod_p():
    mats = np.array([[[1, 2], [3, 4]], [[0, 1], [1, 0]], [[1, 2], [2, 4]]], dtype=np.int64)
    assert det_mod_batch(mats, 5).tolist() == [3, 4, 0]


def test_legendre_table():
    assert legendre_table(5).tolist() == [0, 1, -1, -1, 1]
    assert legendre_table(3).tolist() == [0, 1, -1]


def test_quadratic_values():
    grams = np.array([[[1, 0], [0, 1]]], dtype=np.int64)
    vectors = np.array([[1, 1], [1, 2]], dtype=np.int64)
    assert quadratic_values(grams, vectors, 5).tolist() == [[2, 0]]
