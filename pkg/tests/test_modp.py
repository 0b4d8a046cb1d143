import math

import pytest
from hypothesis import given, strategies as st

from oracles import span_size
from taqlab.modp import SparseMatrix, rank_mod_p, reduce_vector


def dense_to_columns(rows, ncols):
    return [{i: r[j] for i, r in enumerate(rows) if r[j]} for j in range(ncols)]


@st.composite
def small_matrices(draw):
    p = draw(st.sampled_from([3, 5]))
    nrows = draw(st.integers(0, 4))
    ncols = draw(st.integers(1, 4))
    rows = [[draw(st.integers(0, p - 1)) for _ in range(ncols)] for _ in range(nrows)]
    return p, rows, ncols


@given(small_matrices())
def test_rank_matches_span_size(data):
    p, rows, ncols = data
    expect = round(math.log(span_size(rows, p), p))
    assert rank_mod_p([{j: v for j, v in enumerate(r) if v} for r in rows], p) == expect
    mat = SparseMatrix(len(rows), ncols, p, dense_to_columns(rows, ncols))
    assert mat.rank() == expect


@given(small_matrices(), small_matrices())
def test_matmul_agrees_with_dense_product(a, b):
    p, ra, na = a
    _, rb, nb = b
    # shape the second matrix to be composable with the first
    rb = [[(x + 1) % p for x in (rb[i % len(rb)] if rb else [0] * nb)] for i in range(na)]
    A = SparseMatrix(len(ra), na, p, dense_to_columns(ra, na))
    B = SparseMatrix(na, nb, p, dense_to_columns(rb, nb))
    expect = [[sum(ra[i][k] * rb[k][j] for k in range(na)) % p for j in range(nb)] for i in range(len(ra))]
    assert (A @ B).to_dense() == expect


def test_reduce_vector_drops_zeros():
    assert reduce_vector({0: 3, 1: 4, 2: -1}, 3) == {1: 1, 2: 2}


def test_zero_and_identity():
    ident = SparseMatrix(3, 3, 5, [{0: 1}, {1: 1}, {2: 1}])
    assert ident.rank() == 3 and not ident.is_zero() and ident.nnz() == 3
    assert SparseMatrix(2, 2, 5, [{}, {}]).is_zero()


def test_shape_mismatch_is_rejected():
    with pytest.raises(ValueError):
        SparseMatrix(2, 3, 3, [{0: 1}])
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, 3, [{5: 1}, {}]) @ SparseMatrix(3, 1, 3, [{}])
