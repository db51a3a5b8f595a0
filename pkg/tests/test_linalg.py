import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ecclap.linalg import (
    ConvergenceError,
    SymmetricMatrix,
    eigenvalues,
    eigenvalues_batch,
    frobenius_sq,
    trace,
)
from oracles import exact_eigenvalues

LECC_K3 = [[1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
LECC_P3 = [[2, -1, 0], [-1, 1, -1], [0, -1, 2]]


def test_symmetric_matrix_validation():
    with pytest.raises(ValueError):
        SymmetricMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        SymmetricMatrix([[1, 2, 3]])
    with pytest.raises(ValueError):
        SymmetricMatrix([[np.nan]])


def test_symmetric_matrix_read_only():
    m = SymmetricMatrix(LECC_P3)
    with pytest.raises(ValueError):
        m.array[0, 0] = 5.0


def test_zero_matrix():
    s = eigenvalues(SymmetricMatrix(np.zeros((3, 3))))
    assert s.values == (0.0, 0.0, 0.0)
    assert s.sweeps == 0


def test_complete_graph_matrix():
    s = eigenvalues(SymmetricMatrix(LECC_K3))
    assert exact_eigenvalues(LECC_K3) == [2.0, 2.0, -1.0]
    assert s.multiset_close([2, 2, -1], 1e-12)


def test_path_matrix_against_charpoly():
    expected = exact_eigenvalues(LECC_P3)
    assert expected == [3.0, 2.0, 0.0]
    assert np.allclose(eigenvalues(SymmetricMatrix(LECC_P3)).values, expected, atol=1e-12, rtol=0)


def test_trace_and_frobenius():
    assert trace(SymmetricMatrix(LECC_K3)) == 3
    assert frobenius_sq(SymmetricMatrix(LECC_K3)) == 9
    assert frobenius_sq(SymmetricMatrix(LECC_P3)) == 13
    assert frobenius_sq(SymmetricMatrix(np.eye(5))) == 5
    assert trace(SymmetricMatrix(np.zeros((4, 4)))) == 0


def test_sorted_descending_with_ties():
    s = eigenvalues(SymmetricMatrix(np.diag([1.0, 3.0, 3.0, -2.0])))
    assert s.values == (3.0, 3.0, 1.0, -2.0)


def test_rejects_bad_tol():
    with pytest.raises(ValueError):
        eigenvalues(SymmetricMatrix(np.eye(2)), tol=0)


def test_sweep_cap_is_an_error():
    rng = np.random.default_rng(1)
    x = rng.normal(size=(8, 8))
    with pytest.raises(ConvergenceError):
        eigenvalues(SymmetricMatrix(x + x.T), max_sweeps=1)


def test_batch_matches_single():
    rng = np.random.default_rng(2)
    x = rng.normal(size=(5, 6, 6))
    x = x + x.transpose(0, 2, 1)
    values, residuals, sweeps = eigenvalues_batch(x)
    for k in range(5):
        assert values[k].tolist() == list(eigenvalues(SymmetricMatrix(x[k])).values)
    assert np.all(residuals < 1e-12 * np.linalg.norm(x, axis=(1, 2)))
    assert np.all(sweeps <= 10)


def test_convergence_criterion_met():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(12, 12)) * 100
    m = SymmetricMatrix(x + x.T)
    s = eigenvalues(m, tol=1e-12)
    assert s.residual < 1e-12 * np.sqrt(frobenius_sq(m))


symmetric_matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.floats(-10, 10, allow_nan=False), min_size=n * n, max_size=n * n)
    .map(lambda xs: (lambda a: a + a.T)(np.array(xs).reshape(n, n)))
)


@settings(max_examples=150, deadline=None)
@given(symmetric_matrices)
def test_spectral_invariants_property(a):
    m = SymmetricMatrix(a)
    s = eigenvalues(m)
    vals = np.array(s.values)
    n = m.n
    assert np.all(np.diff(vals) <= 0)
    scale = max(1.0, frobenius_sq(m))
    assert abs(vals.sum() - trace(m)) <= 1e-9 * n * scale ** 0.5
    assert abs((vals ** 2).sum() - frobenius_sq(m)) <= 1e-9 * n * scale


@settings(max_examples=60, deadline=None)
@given(symmetric_matrices, st.randoms(use_true_random=False))
def test_permutation_similarity_property(a, rnd):
    m = SymmetricMatrix(a)
    perm = list(range(m.n))
    rnd.shuffle(perm)
    p = np.eye(m.n)[perm].T
    assert np.array_equal(m.permuted(perm).array, p @ m.array @ p.T)
    tol = 1e-9 * max(1.0, np.sqrt(frobenius_sq(m)))
    assert eigenvalues(m.permuted(perm)).multiset_close(eigenvalues(m).values, tol)
