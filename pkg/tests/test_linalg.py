from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from clusterhodge.linalg import (
    Echelon,
    identity,
    mat_mul,
    nullspace,
    rank,
    rank_relative,
    smith_normal_form,
    solve_in_span,
)

small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


@given(small_matrices)
@settings(max_examples=120, deadline=None)
def test_snf_reconstructs_and_is_unimodular(mat):
    snf = smith_normal_form(mat)
    assert mat_mul(snf.p, snf.pinv) == identity(len(mat))
    assert mat_mul(snf.q, snf.qinv) == identity(len(mat[0]))
    s = mat_mul(mat_mul(snf.p, mat), snf.q)
    for i, row in enumerate(s):
        for j, v in enumerate(row):
            if i == j and i < len(snf.diag):
                assert v == snf.diag[i]
            else:
                assert v == 0
    for a, b in zip(snf.diag, snf.diag[1:]):
        assert a > 0 and b % a == 0


@given(small_matrices)
@settings(max_examples=80, deadline=None)
def test_snf_rank_matches_elimination(mat):
    snf = smith_normal_form(mat)
    rows = [dict(enumerate(r)) for r in mat]
    assert snf.rank == rank(rows)


def test_rank_examples():
    assert rank([]) == 0
    assert rank([{0: 0}]) == 0
    assert rank([{0: 2, 1: 4}, {0: 1, 1: 2}]) == 1
    assert rank([{0: Fraction(1, 2)}, {1: 3}]) == 2


@given(small_matrices)
@settings(max_examples=60, deadline=None)
def test_nullspace_vectors_annihilate(mat):
    rows = [dict(enumerate(r)) for r in mat]
    ncols = len(mat[0])
    kernel = nullspace(rows, ncols)
    for vec in kernel:
        for row in rows:
            assert sum(row.get(c, 0) * v for c, v in vec.items()) == 0
    assert len(kernel) == ncols - rank(rows)


def test_solve_in_span_round_trip():
    vectors = [{0: 1, 1: 2}, {1: 1, 2: 3}]
    target = {0: 2, 1: 5, 2: 3}
    coeffs = solve_in_span(vectors, target)
    assert coeffs == [2, 1]
    assert solve_in_span(vectors, {2: 1}) is None


def test_rank_relative_tracks_new_rows():
    base = [{0: 1}]
    extra = [{0: 3}, {1: 1}, {0: 1, 1: 1}]
    grew, idx = rank_relative(base, extra)
    assert grew == 1
    assert idx == [1]


def test_echelon_rank():
    ech = Echelon()
    assert ech.add({0: 1, 1: 1}) is not None
    assert ech.add({0: 2, 1: 2}) is None
    assert ech.rank == 1
