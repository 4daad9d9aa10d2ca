"""Exact linear algebra over field contexts, on both the table-driven path
(small q) and the scalar fallback (q above the table limit)."""

import random

import numpy as np
import pytest

from fermatrc import linalg
from fermatrc.ff import FieldCtx


def _random_matrix(rng, ctx, rows, cols):
    return np.array(
        [[rng.randrange(ctx.q) for _ in range(cols)] for _ in range(rows)],
        dtype=np.int64,
    )


def _matvec(ctx, M, v):
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            acc = ctx.add(acc, ctx.mul(int(a), int(b)))
        out.append(acc)
    return out


def test_rref_fixture_gf3(gf3):
    R, pivots = linalg.rref(gf3, [[1, 2], [2, 1]])
    assert pivots == [0]
    assert R[0].tolist() == [1, 2]
    assert not R[1].any()


def test_rref_is_idempotent(gf9):
    rng = random.Random(3)
    for _ in range(20):
        M = _random_matrix(rng, gf9, 4, 6)
        R, pivots = linalg.rref(gf9, M)
        R2, pivots2 = linalg.rref(gf9, R)
        assert pivots == pivots2
        assert np.array_equal(R, R2)


def test_kernel_basis_annihilates_matrix(gf9):
    rng = random.Random(5)
    for _ in range(25):
        M = _random_matrix(rng, gf9, 3, 7)
        K = linalg.kernel_basis(gf9, M)
        assert K.shape[0] == 7 - linalg.rank(gf9, M)
        for v in K:
            assert _matvec(gf9, M, v) == [0, 0, 0]


def test_kernel_basis_rows_are_independent(gf9):
    rng = random.Random(9)
    M = _random_matrix(rng, gf9, 4, 9)
    K = linalg.kernel_basis(gf9, M)
    assert linalg.rank(gf9, K) == K.shape[0]


def test_solve_consistent_and_inconsistent(gf3):
    A = [[1, 1], [0, 1]]
    x = linalg.solve(gf3, A, [2, 1])
    assert x is not None
    assert _matvec(gf3, np.array(A), x) == [2, 1]
    B = [[1, 1], [2, 2]]
    assert linalg.solve(gf3, B, [0, 1]) is None


def test_echelon_membership(gf9):
    ech = linalg.Echelon(gf9, 4)
    assert ech.add([1, 2, 0, 0])
    assert ech.add([0, 0, 3, 1])
    # 2 * (1, 2, 0, 0) has second entry 2*2 = 1 in GF(9)
    assert not ech.add([2, 1, 0, 0])
    # sum of the two stored rows
    assert not ech.add([1, 2, 3, 1])
    assert ech.dim == 2


def test_seed_rows_matches_sequential_adds(gf9):
    rng = random.Random(13)
    for _ in range(15):
        M = _random_matrix(rng, gf9, 5, 6)
        seeded = linalg.Echelon(gf9, 6)
        seeded.seed_rows(M)
        serial = linalg.Echelon(gf9, 6)
        for row in M:
            serial.add(row)
        assert seeded.dim == serial.dim
        probe = _random_matrix(rng, gf9, 8, 6)
        for v in probe:
            a = seeded.reduce(v)
            b = serial.reduce(v)
            assert bool(a.any()) == bool(b.any())


def test_scalar_fallback_path_agrees():
    big = FieldCtx(5, 4)
    assert big.tables() is None
    rng = random.Random(17)
    M = _random_matrix(rng, big, 3, 6)
    K = linalg.kernel_basis(big, M)
    assert K.shape[0] == 6 - linalg.rank(big, M)
    for v in K:
        assert _matvec(big, M, v) == [0, 0, 0]


def test_normalize_leading(gf9):
    v = linalg.normalize_leading(gf9, [0, 2, 4])
    assert v[1] == 1
    assert v[2] == gf9.mul(gf9.inv(2), 4)
    z = linalg.normalize_leading(gf9, [0, 0])
    assert not z.any()
