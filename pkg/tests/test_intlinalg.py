import random
from fractions import Fraction
from itertools import combinations
from math import gcd
from functools import reduce

import numpy as np
import pytest
import sympy

from tcox.exceptions import DegeneratePoints
from tcox.intlinalg import (
    FGAbelianGroup, change_basis, cokernel, hnf, kernel_basis, rank, saturate, snf, solve, syz2,
    trinomial_syzygies,
)


def _random_matrix(rng, max_size=6, bound=9):
    m, n = rng.randint(1, max_size), rng.randint(1, max_size)
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]


def _det(rows):
    """ Integer determinant by fraction-free (Bareiss) elimination. """
    M = [list(r) for r in rows]
    n, sign, prev = len(M), 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1]


def _gcd_of_minors(A, k):
    m, n = len(A), len(A[0])
    minors = [_det([[A[i][j] for j in cols] for i in rows])
              for rows in combinations(range(m), k) for cols in combinations(range(n), k)]
    return reduce(gcd, (abs(x) for x in minors), 0)


def test_snf_random_properties():
    rng = random.Random(20261016)
    for _ in range(200):
        A = _random_matrix(rng)
        res = snf(A)
        assert (res.U.dot(np.array(A, dtype=object)).dot(res.V) == res.S).all()
        assert abs(sympy.Matrix(res.U.tolist()).det()) == 1
        assert abs(sympy.Matrix(res.V.tolist()).det()) == 1
        d = res.invariant_factors
        assert all(x > 0 for x in d)
        assert all(b % a == 0 for a, b in zip(d, d[1:]))
        m, n = res.S.shape
        assert all(res.S[i, j] == 0 for i in range(m) for j in range(n) if i != j or i >= len(d))
        assert res.rank == sympy.Matrix(A).rank()


def test_snf_matches_gcd_of_minors():
    rng = random.Random(7)
    for _ in range(200):
        A = _random_matrix(rng, max_size=6, bound=6)
        d = snf(A).invariant_factors
        for k in range(1, len(d) + 1):
            assert _gcd_of_minors(A, k) == reduce(lambda a, b: a * b, d[:k], 1)


def test_snf_example():
    assert snf([[2, 4], [6, 8]]).invariant_factors == (2, 4)
    assert snf([[0, 0], [0, 0]]).invariant_factors == ()


def test_hnf_preserves_row_lattice():
    H = hnf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert H.shape[0] == 3
    for i in range(H.shape[0]):
        pivot = next(j for j in range(H.shape[1]) if H[i, j] != 0)
        assert H[i, pivot] > 0
        assert all(0 <= H[k, pivot] < H[i, pivot] for k in range(i))
    assert snf(H).invariant_factors == snf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).invariant_factors


def test_rank_and_kernel():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([], ncols=3) == 0
    assert kernel_basis([[1, 1, 1]]) == [(1, 0, -1), (0, 1, -1)]
    assert kernel_basis([[1, 0], [0, 1]]) == []
    for v in kernel_basis([[2, 3, 5], [1, -1, 4]]):
        assert 2 * v[0] + 3 * v[1] + 5 * v[2] == 0
        assert v[0] - v[1] + 4 * v[2] == 0


def test_saturate():
    assert saturate([[2, 0]], 2) == [(1, 0)]
    assert saturate([], 2) == []


def test_solve():
    assert solve([[2, 0], [0, 3]], [4, 9]) == (2, 3)
    assert solve([[2]], [3]) is None
    x = solve([[1, 1, 1]], [5])
    assert sum(x) == 5


def test_cokernel_of_2d4_relations():
    rows = [[-1, 1, 1, 0, 0, 0], [-1, 0, 0, 2, 0, 0], [-1, 0, 0, 0, 2, 0], [-1, 0, 0, 0, 0, 2],
            [0, -2, -1, 1, 1, 1]]
    assert snf(rows).invariant_factors == (1, 1, 1, 2, 2)
    group, images = cokernel(rows)
    assert group == FGAbelianGroup(1, (2, 2))
    assert len(images) == 6
    for row in rows:
        total = group.zero()
        for k, img in zip(row, images):
            total = total + k * img
        assert total.is_zero


def test_cokernel_sign_normalisation():
    group, images = cokernel([[1, 1, 1]])
    assert group.free_rank == 2
    for c in range(2):
        first = next(img.free_part[c] for img in images if img.free_part[c] != 0)
        assert first > 0


def test_cokernel_without_relations():
    group, images = cokernel([], ncols=2)
    assert group == FGAbelianGroup(2)
    assert [img.free_part for img in images] == [(1, 0), (0, 1)]


def test_group_arithmetic():
    G = FGAbelianGroup(1, (2, 4))
    a = G.element((1,), (1, 3))
    assert (a + a).torsion_part == (0, 2)
    assert (4 * G.element((0,), (1, 1))).is_zero
    assert G.element((0,), (1, 2)).order() == 2
    assert a.order() is None
    assert str(G) == "Z + Z/2 + Z/4"
    with pytest.raises(ValueError):
        FGAbelianGroup(0, (2, 3))


def test_syz2():
    syz = syz2([(1, 0), (0, 1), (1, 1), (1, 2)])
    assert len(syz) == 2
    for beta in syz:
        assert beta[0] + beta[2] + beta[3] == 0
        assert beta[1] + beta[2] + 2 * beta[3] == 0
    assert syz2([(1, 0), (0, 1)]) == []
    with pytest.raises(DegeneratePoints):
        syz2([(1, 2), (2, 4), (0, 1)])
    with pytest.raises(DegeneratePoints):
        syz2([(0, 0), (1, 0)])


def test_trinomial_syzygies_annihilate():
    rng = random.Random(3)
    for _ in range(30):
        points = []
        while len(points) < rng.randint(3, 6):
            p = (Fraction(rng.randint(-5, 5), rng.randint(1, 3)), Fraction(rng.randint(-5, 5)))
            if p != (0, 0) and all(p[0] * q[1] != p[1] * q[0] for q in points):
                points.append(p)
        syzygies = trinomial_syzygies(points)
        assert len(syzygies) == len(points) - 2
        for i, beta in enumerate(syzygies):
            assert [k for k, b in enumerate(beta) if b] == [i, i + 1, i + 2]
            assert sum(b * p[0] for b, p in zip(beta, points)) == 0
            assert sum(b * p[1] for b, p in zip(beta, points)) == 0


def test_trinomial_syzygies_example():
    assert trinomial_syzygies([(0, 1), (1, 0), (1, 1)]) == [(Fraction(1), Fraction(1), Fraction(-1))]
    assert trinomial_syzygies([(1, 0), (0, 1)]) == []


def test_change_basis_2d4():
    rows = [[-1, 1, 1, 0, 0, 0], [-1, 0, 0, 2, 0, 0], [-1, 0, 0, 0, 2, 0], [-1, 0, 0, 0, 0, 2],
            [0, -2, -1, 1, 1, 1]]
    group, images = cokernel(rows)
    d1, d2, d3, d4, d5 = images[1:]
    new_group, new_images = change_basis(group, images, [d4], [d3 - d5, d4 - d5])
    assert new_group == group
    assert new_images[4].as_tuple() == (1, 0, 0)
    assert new_images[5].as_tuple() == (1, 0, 1)
    assert new_images[3].as_tuple() == (1, 1, 1)
    assert new_images[1].as_tuple() == (1, 1, 0)


def test_change_basis_rejects_non_basis():
    group, images = cokernel([[0, 0]], ncols=2)
    with pytest.raises(ValueError):
        change_basis(group, images, [2 * images[0], images[1]])
