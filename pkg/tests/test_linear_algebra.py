from fractions import Fraction
import random

import pytest

from HomCat.core import ChainMapError
from HomCat.LinearAlgebra.qmat import QMat, kernel_basis, rank, solve
from HomCat.LinearAlgebra.subquotient import complex_homology_dims, free_homology, homology, induced_map


def test_qmat_products():
    a = QMat.from_dense([[1, 2], [3, 4]])
    assert a * QMat.identity(2) == a
    assert (a * a).to_dense() == [[7, 10], [15, 22]]
    assert (a - a).is_zero()
    assert (a * Fraction(1, 2)).to_dense()[0] == [Fraction(1, 2), 1]
    with pytest.raises(ValueError):
        a * QMat.zero(3, 1)


def test_block_assembly():
    blocks = {(0, 0): QMat.identity(1), (1, 1): QMat.from_dense([[2, 0], [0, 3]])}
    matrix = QMat.block(blocks, [1, 2], [1, 2])
    assert matrix.to_dense() == [[1, 0, 0], [0, 2, 0], [0, 0, 3]]
    with pytest.raises(ValueError):
        QMat.block({(0, 0): QMat.identity(2)}, [1], [1])


@pytest.mark.parametrize("rows, expected", [
    ([[1, 2], [2, 4]], 1),
    ([[1, 0, 1], [0, 1, 1], [1, 1, 2]], 2),
    ([[0, 0], [0, 0]], 0),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 10]], 3),
])
def test_rank_and_kernel(rows, expected):
    m = QMat.from_dense(rows)
    assert rank(m) == expected
    kernel = kernel_basis(m)
    assert kernel.cols == m.cols - expected
    assert (m * kernel).is_zero()


def test_solve():
    m = QMat.from_dense([[1, 1], [1, -1]])
    x = solve(m, {0: 2, 1: 0})
    assert x == {0: 1, 1: 1}
    assert solve(QMat.from_dense([[1], [1]]), {0: 1, 1: 2}) is None


def test_homology_of_exact_sequence():
    d_in = QMat.from_dense([[1], [0]])
    d_out = QMat.from_dense([[0, 1]])
    assert homology(d_in, d_out).dimension == 0
    assert homology(QMat.zero(2, 1), d_out).dimension == 1


def test_homology_rejects_non_complex():
    with pytest.raises(ChainMapError):
        homology(QMat.identity(1), QMat.identity(1))


def test_induced_map_of_identity():
    source = free_homology(2)
    assert induced_map(QMat.identity(2), source, source) == QMat.identity(2)


def test_induced_map_on_quotient():
    # C = span(e0, e1) with e1 a boundary, so homology is spanned by e0
    sub = homology(QMat.from_dense([[0], [1]]), QMat.zero(0, 2))
    assert sub.dimension == 1
    swap = QMat.from_dense([[1, 0], [5, 1]])
    assert induced_map(swap, sub, sub) == QMat.identity(1)


def test_complex_homology_dims():
    assert complex_homology_dims({0: 1, 1: 1}, {0: QMat.identity(1)}) == {}
    assert complex_homology_dims({0: 2, 1: 1}, {0: QMat.from_dense([[1, 1]])}) == {0: 1}
    assert complex_homology_dims({-1: 1, 0: 1}, {}) == {-1: 1, 0: 1}


def test_induced_map_rejects_boundary_leaving_the_boundaries():
    # e1 is a boundary of the source but a non-zero class of the target
    source = homology(QMat.from_dense([[0], [1]]), QMat.zero(0, 2))
    target = free_homology(2)
    with pytest.raises(ChainMapError):
        induced_map(QMat.identity(2), source, target)
    assert induced_map(QMat.identity(2), source, target, check = False).to_dense() == [[1], [0]]


def test_induced_map_rejects_non_cycle_image():
    target = homology(QMat.zero(1, 0), QMat.identity(1))
    assert target.dimension == 0
    with pytest.raises(ChainMapError):
        induced_map(QMat.identity(1), free_homology(1), target)


def _random_matrix(generator, rows, cols, density = 0.5):
    return QMat(rows, cols, {(r, c): generator.randint(-3, 3) for r in range(rows) for c in range(cols) if generator.random() < density})


def test_rank_nullity_on_random_matrices():
    generator = random.Random(11)
    for _ in range(30):
        m = _random_matrix(generator, generator.randint(1, 7), generator.randint(1, 7))
        kernel = kernel_basis(m)
        assert rank(m) + kernel.cols == m.cols
        assert rank(m) == rank(m.transpose())
        assert (m * kernel).is_zero()


def test_induced_map_of_composite():
    # C = Q^3 with e2 a boundary; maps fixing the line of e2 are chain maps
    generator = random.Random(5)
    sub = homology(QMat.from_dense([[0], [0], [1]]), QMat.zero(0, 3))
    assert sub.dimension == 2

    def chain_map():
        entries = {(r, c): generator.randint(-4, 4) for r in range(3) for c in range(2)}
        entries[(2, 2)] = generator.randint(1, 4)
        return QMat(3, 3, entries)

    for _ in range(10):
        f, g = chain_map(), chain_map()
        assert induced_map(g * f, sub, sub) == induced_map(g, sub, sub) * induced_map(f, sub, sub)
