"""Exact linear algebra: frozen examples and randomized invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmmcoh.linalg import (
    SparseMatrix,
    VectorQ,
    column_space_basis,
    kernel_basis,
    rank,
    rref,
    solve,
    solve_many,
)


def test_rank_of_frozen_example():
    m = SparseMatrix.from_rows([[1, 1], [0, 1], [1, 2]])
    assert rank(m) == 2


def test_kernel_of_single_row():
    m = SparseMatrix.from_rows([[1, 1, 0]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert m.apply(v).is_zero()
    # canonical RREF kernel: one vector per free column, unit there
    assert basis[0].to_list() == [Fraction(-1), Fraction(1), Fraction(0)]
    assert basis[1].to_list() == [Fraction(0), Fraction(0), Fraction(1)]


def test_solve_scalar():
    m = SparseMatrix.from_rows([[2]])
    x = solve(m, VectorQ.from_list([3]))
    assert x.to_list() == [Fraction(3, 2)]


def test_solve_inconsistent_returns_none():
    m = SparseMatrix.from_rows([[1, 0], [1, 0]])
    assert solve(m, VectorQ.from_list([1, 2])) is None


def test_solve_underdetermined_sets_free_vars_to_zero():
    m = SparseMatrix.from_rows([[1, 1]])
    x = solve(m, VectorQ.from_list([5]))
    assert x.to_list() == [Fraction(5), Fraction(0)]


def test_column_space_basis_are_original_columns():
    m = SparseMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    basis = column_space_basis(m)
    assert len(basis) == rank(m) == 2
    assert basis[0] == m.column(0)
    assert basis[1] == m.column(2)


def test_exactness_no_floats():
    # a case where floating point would drift: Hilbert-like matrix
    n = 6
    m = SparseMatrix(
        n, n, {(i, j): Fraction(1, i + j + 1) for i in range(n) for j in range(n)}
    )
    assert rank(m) == n
    assert kernel_basis(m) == []


def test_empty_and_zero_shapes():
    z = SparseMatrix.zero(0, 3)
    assert rank(z) == 0
    assert len(kernel_basis(z)) == 3
    z2 = SparseMatrix.zero(3, 0)
    assert rank(z2) == 0
    assert kernel_basis(z2) == []


def test_rref_is_canonical_under_row_shuffle():
    rows = [[2, 4, 1], [1, 2, 0], [0, 0, 3]]
    m1 = SparseMatrix.from_rows(rows)
    m2 = SparseMatrix.from_rows(rows[::-1])
    p1, e1 = rref(m1)
    p2, e2 = rref(m2)
    assert p1 == p2
    assert e1 == e2


def test_matmul_and_vector_ops():
    a = SparseMatrix.from_rows([[1, 2], [3, 4]])
    b = SparseMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_lists() == [[2, 1], [4, 3]]
    v = VectorQ.from_list([1, -1])
    assert (a @ v).to_list() == [Fraction(-1), Fraction(-1)]
    assert (v + v).scale(Fraction(1, 2)) == v


# -- randomized invariants ---------------------------------------------------

small_fraction = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)


@st.composite
def matrices(draw, max_dim=6):
    rows = draw(st.integers(min_value=0, max_value=max_dim))
    cols = draw(st.integers(min_value=0, max_value=max_dim))
    entries = {}
    for r in range(rows):
        for c in range(cols):
            if draw(st.booleans()):
                entries[(r, c)] = draw(small_fraction)
    return SparseMatrix(rows, cols, entries)


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.cols


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m):
        assert m.apply(v).is_zero()


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_column_space_is_independent_and_spans(m):
    basis = column_space_basis(m)
    assert len(basis) == rank(m)
    if basis:
        assert rank(SparseMatrix.from_columns(basis)) == len(basis)


@given(matrices(max_dim=5), st.data())
@settings(max_examples=80, deadline=None)
def test_solve_roundtrip(m, data):
    x = VectorQ(
        m.cols,
        {
            i: data.draw(small_fraction)
            for i in range(m.cols)
            if data.draw(st.booleans())
        },
    )
    b = m.apply(x)
    got = solve(m, b)
    assert got is not None
    assert m.apply(got) == b


@given(matrices(max_dim=5), st.lists(st.integers(0, 4), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_solve_many_matches_solve(m, picks):
    bs = []
    for p in picks:
        entries = {p % m.rows: Fraction(1)} if m.rows else {}
        bs.append(VectorQ(m.rows, entries))
    many = solve_many(m, bs)
    for b, got in zip(bs, many):
        single = solve(m, b)
        assert (single is None) == (got is None)
        if got is not None:
            assert m.apply(got) == b


def test_identity_and_zero_trivial_cases():
    eye = SparseMatrix.identity(2)
    assert rank(eye) == 2
    assert kernel_basis(eye) == []
    assert len(column_space_basis(eye)) == 2
    assert rank(SparseMatrix.zero(3, 4)) == 0
    assert column_space_basis(SparseMatrix.zero(3, 4)) == []

    col = SparseMatrix.from_rows([[Fraction(1)], [Fraction(2)]])
    (v,) = column_space_basis(col)
    assert v.to_list()[1] == 2 * v.to_list()[0] != 0

    b = VectorQ.from_list([Fraction(5), Fraction(-7)])
    assert solve(eye, b) == b
    assert solve(SparseMatrix.zero(2, 2), b) is None
