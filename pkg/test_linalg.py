"""
Testy algebry liniowej nad F_q
"""

import numpy as np
import pytest

from src.core.gfq import make_field
from src.core.linalg import (
    RowSpace,
    left_nullspace,
    mat_det,
    mat_identity,
    mat_inverse,
    mat_mul,
    nullspace,
    rank,
    reduce_modulo,
    row_reduce,
    solve,
)


def _times(field, m, v):
    t = field.tables
    out = []
    for row in np.asarray(m):
        acc = 0
        for a, b in zip(row, v):
            acc = t.add_l[acc][t.mul_l[int(a)][int(b)]]
        out.append(acc)
    return out


def test_rank_and_rref_over_prime_field():
    f5 = make_field(5)
    m = [[1, 2, 3], [2, 4, 0], [0, 0, 1]]
    R, pivots = row_reduce(f5, m)
    assert pivots == [0, 2]
    assert rank(f5, m) == 2
    assert R[0, 0] == 1 and R[1, 2] == 1


def test_nullspace_vectors_are_annihilated():
    f5 = make_field(5)
    m = [[1, 2, 3], [2, 4, 0]]
    basis = nullspace(f5, m)
    assert basis.shape == (1, 3)
    assert _times(f5, m, basis[0]) == [0, 0]
    left = left_nullspace(f5, [[1, 2], [2, 4]])
    assert left.shape == (1, 2)
    assert _times(f5, np.array([[1, 2], [2, 4]]).T, left[0]) == [0, 0]


def test_nullspace_over_extension_field(f4):
    g = 2
    m = [[1, g], [g, f4.tables.mul_l[g][g]]]
    basis = nullspace(f4, m)
    assert basis.shape == (1, 2)
    assert _times(f4, m, basis[0]) == [0, 0]


def test_solve_consistent_and_inconsistent():
    f7 = make_field(7)
    a = [[1, 1], [1, 6]]
    x = solve(f7, a, [3, 1])
    assert _times(f7, a, x) == [3, 1]
    assert solve(f7, [[1, 1], [2, 2]], [1, 3]) is None


def test_reduce_modulo_rowspace():
    f3 = make_field(3)
    space = RowSpace(f3, 3)
    space.extend([[1, 1, 0]])
    space.extend([[2, 2, 0], [0, 1, 1]])
    assert space.dim == 2
    reduced = reduce_modulo(f3, np.array([[1, 2, 1]]), space.basis, space.pivots)
    assert not reduced.any()


def test_small_matrix_inverse_and_det(f4):
    a = ((1, 2), (2, 1))
    inv = mat_inverse(f4, a)
    assert mat_mul(f4, a, inv) == mat_identity(2)
    assert mat_det(f4, a) != 0
    with pytest.raises(ZeroDivisionError):
        mat_inverse(make_field(3), ((1, 2), (2, 1)))
