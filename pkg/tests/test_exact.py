import random

import numpy as np

from wucalc.exact import SparseIntMatrix, charpoly, det_bareiss, kernel_basis, rank

from oracles import fraction_det, fraction_rank


def random_int_matrix(rng, nrows, ncols, lo=-4, hi=4, density=0.7):
    return [[rng.randint(lo, hi) if rng.random() < density else 0
             for _ in range(ncols)] for _ in range(nrows)]


def to_sparse(rows):
    return SparseIntMatrix.from_dense(rows)


def test_integer_rank_matches_fraction_elimination():
    rng = random.Random(42)
    for _ in range(60):
        rows = random_int_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        assert rank(to_sparse(rows)) == fraction_rank(rows)


def test_integer_rank_of_rank_one_product():
    # outer product of two vectors always has rank one
    rng = random.Random(9)
    for _ in range(20):
        u = [rng.randint(-3, 3) for _ in range(6)]
        v = [rng.randint(-3, 3) for _ in range(6)]
        if not any(u) or not any(v):
            continue
        rows = [[a * b for b in v] for a in u]
        assert rank(to_sparse(rows)) == 1


def test_det_bareiss_matches_fraction_gauss():
    rng = random.Random(43)
    for _ in range(50):
        n = rng.randint(1, 7)
        rows = random_int_matrix(rng, n, n)
        assert det_bareiss(rows) == fraction_det(rows)


def test_det_bareiss_stays_exact_on_big_entries():
    rng = random.Random(44)
    rows = random_int_matrix(rng, 6, 6, lo=-10**6, hi=10**6, density=1.0)
    assert det_bareiss(rows) == fraction_det(rows)


def test_det_of_singular_matrix_is_zero():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert det_bareiss(rows) == 0


def test_kernel_basis_vectors_are_annihilated():
    rng = random.Random(45)
    for _ in range(40):
        rows = random_int_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        m = to_sparse(rows)
        basis = kernel_basis(m)
        assert len(basis) == m.ncols - rank(m)
        for vec in basis:
            image = [sum(a * b for a, b in zip(row, vec)) for row in rows]
            assert all(x == 0 for x in image), f"{vec} not in kernel"


def test_kernel_basis_vectors_are_primitive_integers():
    m = to_sparse([[2, -2, 0], [0, 0, 0]])
    basis = kernel_basis(m)
    for vec in basis:
        assert all(isinstance(x, int) for x in vec)
        from math import gcd
        g = 0
        for x in vec:
            g = gcd(g, x)
        assert g == 1


def test_charpoly_of_known_matrix():
    # det(x I - A) for [[2, 1], [1, 2]] is x^2 - 4x + 3
    assert charpoly([[2, 1], [1, 2]]) == [1, -4, 3]


def test_charpoly_matches_numpy_on_random_symmetric_matrices():
    rng = random.Random(46)
    for _ in range(25):
        n = rng.randint(1, 6)
        a = random_int_matrix(rng, n, n, lo=-3, hi=3, density=1.0)
        sym = [[a[i][j] + a[j][i] for j in range(n)] for i in range(n)]
        ours = charpoly(sym)
        theirs = np.poly(np.array(sym, dtype=float))
        assert len(ours) == len(theirs)
        for x, y in zip(ours, theirs):
            assert abs(x - y) < 1e-6 * max(1.0, abs(y)), (sym, ours, theirs)


def test_charpoly_constant_term_is_signed_determinant():
    rng = random.Random(47)
    for _ in range(20):
        n = rng.randint(1, 6)
        rows = random_int_matrix(rng, n, n)
        cp = charpoly(rows)
        assert cp[-1] == (-1) ** n * det_bareiss(rows)
