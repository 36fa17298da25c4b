import itertools

import pytest
from hypothesis import given, settings, strategies as st

from coloredknots.linalg import (
    det_exact,
    identity,
    matvec,
    nullspace_modp,
    rank_modp,
    smith_normal_form,
)
from conftest import cofactor_det

G_5_2 = [[-2, 1], [1, -4]]
G_11N141 = [
    [-2, 1, 0, 0, 0],
    [1, -2, 1, 0, 0],
    [0, 1, -1, -1, 1],
    [0, 0, -1, 3, 0],
    [0, 0, 1, 0, -5],
]


def square(max_n=5):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def rect():
    return st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
        lambda rc: st.lists(st.lists(st.integers(-9, 9), min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


@pytest.mark.parametrize(
    "m, expected",
    [(G_5_2, 7), (G_11N141, 21), (identity(4), 1), ([[-7]], -7), ([], 1)],
)
def test_det_examples(m, expected):
    assert det_exact(m) == expected
    assert cofactor_det(m) == expected


def test_det_needs_square():
    with pytest.raises(ValueError):
        det_exact([[1, 2, 3], [4, 5, 6]])


def test_det_big_entries_stay_exact():
    m = [[10**30, 1], [1, 10**30]]
    assert det_exact(m) == 10**60 - 1


@settings(max_examples=200, deadline=None)
@given(square())
def test_det_matches_cofactor_expansion(m):
    assert det_exact(m) == cofactor_det(m)


@pytest.mark.parametrize(
    "m, p, dim",
    [([[-7]], 7, 1), (G_5_2, 7, 1), (identity(3), 5, 0), (G_11N141, 7, 1), (G_11N141, 3, 1), (G_11N141, 5, 0)],
)
def test_nullspace_examples(m, p, dim):
    assert len(nullspace_modp(m, p)) == dim


def test_nullspace_rejects_composite():
    with pytest.raises(ValueError):
        nullspace_modp([[1]], 9)


@settings(max_examples=150, deadline=None)
@given(rect(), st.sampled_from([2, 3, 5, 7]))
def test_nullspace_is_kernel_basis(m, p):
    basis = nullspace_modp(m, p)
    cols = len(m[0])
    for b in basis:
        assert all(x % p == 0 for x in matvec(m, b))
    # brute-force kernel size equals p^dim
    kernel = sum(
        1 for v in itertools.product(range(p), repeat=cols) if all(x % p == 0 for x in matvec(m, v))
    )
    assert kernel == p ** len(basis)
    assert rank_modp(m, p) + len(basis) == cols


@settings(max_examples=100, deadline=None)
@given(rect(), st.sampled_from([3, 5, 7]))
def test_nullspace_reduced_column_echelon(m, p):
    basis = nullspace_modp(m, p)
    leads = [next(i for i, x in enumerate(b) if x) for b in basis]
    assert leads == sorted(set(leads))
    for b, lead in zip(basis, leads):
        assert b[lead] == 1
        assert all(other[lead] == 0 for other in basis if other is not b)


@pytest.mark.parametrize(
    "m, diag",
    [
        (G_5_2, (1, 7)),
        ([[-7]], (7,)),
        ([[-3, 0], [0, -3]], (3, 3)),
        (G_11N141, (1, 1, 1, 1, 21)),
        ([[2, 4], [4, 8]], (2, 0)),
    ],
)
def test_smith_examples(m, diag):
    assert smith_normal_form(m).diagonal == diag


@settings(max_examples=200, deadline=None)
@given(rect())
def test_smith_divisibility_and_det(m):
    snf = smith_normal_form(m)
    nz = [d for d in snf.diagonal if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(d == 0 for d in snf.diagonal[len(nz):])
    if len(m) == len(m[0]):
        det = det_exact(m)
        prod = 1
        for d in snf.diagonal:
            prod *= d
        assert prod == abs(det)
