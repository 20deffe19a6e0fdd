import random

import pytest

from dihedralcodes.errors import DuplicateIndexError, MixedContextsError
from dihedralcodes.gf import make_field
from dihedralcodes.linalg import MatrixGF

GF13 = make_field(13, [0, 1])
GF25 = make_field(5, [2, 0, 1])


def random_matrix(ctx, rows, cols, rng):
    return MatrixGF(
        ctx, [[ctx.random_element(rng) for _ in range(cols)] for _ in range(rows)]
    )


def test_rref_proportional_rows():
    m = MatrixGF.from_rows(GF13, [[1, 1, 1], [2, 2, 2]])
    _, rank, pivots = m.rref()
    assert rank == 1
    assert pivots == [0]


def test_rref_identity():
    m = MatrixGF.identity(GF13, 4)
    reduced, rank, pivots = m.rref()
    assert rank == 4
    assert pivots == [0, 1, 2, 3]
    assert reduced == m


def test_rref_is_row_equivalent_and_idempotent():
    rng = random.Random(0)
    for _ in range(10):
        m = random_matrix(GF13, 4, 6, rng)
        reduced, rank, _ = m.rref()
        again, rank2, _ = reduced.rref()
        assert again == reduced
        assert rank == rank2
        # same row space: stacking does not increase the rank
        assert m.vstack(reduced).rank() == rank


def test_kernel_of_all_ones_row():
    m = MatrixGF.from_rows(GF13, [[1, 1, 1]])
    ker = m.kernel_basis()
    assert ker.rows == 2
    for i in range(ker.rows):
        row = ker.row(i)
        assert sum(row[1:], row[0]) == GF13.zero()


def test_kernel_of_identity_is_empty():
    ker = MatrixGF.identity(GF13, 5).kernel_basis()
    assert ker.rows == 0
    assert ker.cols == 5


def test_kernel_identity_block_on_free_columns():
    m = MatrixGF.from_rows(GF13, [[1, 2, 3, 4], [0, 0, 1, 5]])
    ker = m.kernel_basis()
    reduced, rank, pivots = m.rref()
    free = [c for c in range(4) if c not in pivots]
    assert ker.rows == len(free)
    for i, f in enumerate(free):
        for j, g in enumerate(free):
            expected = GF13.one() if i == j else GF13.zero()
            assert ker[i, g] == expected


def test_rank_nullity_and_annihilation_random():
    rng = random.Random(1)
    for ctx in (GF13, GF25):
        for _ in range(10):
            rows = rng.randrange(1, 6)
            cols = rng.randrange(1, 7)
            m = random_matrix(ctx, rows, cols, rng)
            ker = m.kernel_basis()
            assert m.rank() + ker.rows == cols
            if ker.rows:
                prod = m @ ker.transpose()
                assert all(
                    prod[i, j] == ctx.zero()
                    for i in range(prod.rows)
                    for j in range(prod.cols)
                )


def test_columns_rank_examples():
    ident = MatrixGF.identity(GF13, 3)
    assert ident.columns_rank([0, 1]) == 2
    prop = MatrixGF.from_rows(GF13, [[1, 2], [2, 4]])
    assert prop.columns_rank([0, 1]) == 1


def test_columns_rank_errors():
    m = MatrixGF.identity(GF13, 3)
    with pytest.raises(IndexError):
        m.columns_rank([0, 3])
    with pytest.raises(DuplicateIndexError):
        m.columns_rank([1, 1])


def test_columns_rank_matches_materialized_submatrix():
    rng = random.Random(2)
    for _ in range(20):
        m = random_matrix(GF25, 4, 7, rng)
        size = rng.randrange(1, 7)
        cols = rng.sample(range(7), size)
        assert m.columns_rank(cols) == m.submatrix_columns(cols).rank()


def test_matmul_and_vector():
    a = MatrixGF.from_rows(GF13, [[1, 2], [3, 4]])
    b = MatrixGF.from_rows(GF13, [[5, 6], [7, 8]])
    assert (a @ b) == MatrixGF.from_rows(GF13, [[19 % 13, 22 % 13], [43 % 13, 50 % 13]])
    assert a.mul_vector([GF13.element(1), GF13.element(1)]) == [
        GF13.element(3),
        GF13.element(7),
    ]


def test_inverse_roundtrip():
    rng = random.Random(3)
    for _ in range(10):
        m = random_matrix(GF13, 4, 4, rng)
        if m.rank() < 4:
            continue
        assert m @ m.inverse() == MatrixGF.identity(GF13, 4)
    with pytest.raises(ValueError):
        MatrixGF.from_rows(GF13, [[1, 1], [2, 2]]).inverse()


def test_row_space_contains():
    m = MatrixGF.from_rows(GF13, [[1, 0, 2], [0, 1, 3]]).rref()[0]
    assert m.row_space_contains([1, 1, 5])
    assert not m.row_space_contains([0, 0, 1])


def test_mixed_context_entries_rejected():
    with pytest.raises(MixedContextsError):
        MatrixGF(GF13, [[GF25.one()]])


def test_json_roundtrip():
    m = MatrixGF.from_rows(GF25, [[[4, 3], [0, 1]], [[2, 0], [1, 1]]])
    doc = m.to_json()
    assert doc["rows"] == 2 and doc["cols"] == 2
    assert doc["field"] == "p=5;mod=[2,0,1]"
    assert MatrixGF.from_json(doc) == m


def test_text_grid():
    m = MatrixGF.from_rows(GF13, [[1, 10], [0, 2]])
    assert m.text().splitlines() == ["1 10", "0  2"]
