import numpy as np
import pytest

from minleg.symmat import (
    commutator,
    frobenius_inner,
    frobenius_norm,
    sym_eigen,
    symmetrize,
)

from _helpers import random_symmetric


def test_symmetrize_basic():
    a = np.array([[1.0, 2.0], [0.0, 3.0]])
    s = symmetrize(a)
    assert np.array_equal(s, s.T)
    assert s[0, 1] == 1.0


def test_symmetrize_rejects_bad_input():
    with pytest.raises(ValueError):
        symmetrize(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        symmetrize(np.ones(4))
    with pytest.raises(ValueError):
        symmetrize(np.array([[1.0, np.nan], [0.0, 1.0]]))


def test_frobenius_inner_and_norm():
    a = np.array([[1.0, 2.0], [2.0, -1.0]])
    b = np.array([[0.0, 1.0], [1.0, 3.0]])
    assert frobenius_inner(a, b) == 2.0 + 2.0 - 3.0
    assert abs(frobenius_norm(a) - np.sqrt(10.0)) < 1e-15
    with pytest.raises(ValueError):
        frobenius_inner(a, np.zeros((3, 3)))


def test_frobenius_inner_closed_forms():
    eye2 = np.eye(2)
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    sign = np.diag([1.0, -1.0])
    assert frobenius_inner(eye2, eye2) == 2.0
    assert frobenius_inner(sign, swap) == 0.0
    assert frobenius_inner(swap, swap) == 2.0


def test_commutator_closed_forms():
    assert np.max(np.abs(commutator(np.diag([1.0, 2.0]), np.diag([3.0, 4.0])))) == 0.0
    sign = np.diag([1.0, -1.0])
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    want = 2.0 * np.array([[0.0, 1.0], [-1.0, 0.0]])
    assert np.array_equal(commutator(sign, swap), want)
    c = commutator(sign / np.sqrt(2.0), swap)
    assert abs(frobenius_norm(c) ** 2 - 4.0) < 1e-14


def test_commutator_antisymmetric():
    rng = np.random.default_rng(0)
    for _ in range(25):
        a = random_symmetric(rng, 4)
        b = random_symmetric(rng, 4)
        c = commutator(a, b)
        assert np.allclose(c, -commutator(b, a), atol=1e-15)
        # commutator of symmetric matrices is antisymmetric
        assert np.max(np.abs(c + c.T)) < 1e-14
        assert np.max(np.abs(commutator(a, a))) == 0.0


def test_commutator_norm_bound_fuzz():
    # ||[A,B]||^2 <= 2 ||A||^2 ||B||^2 for arbitrary square A, B
    rng = np.random.default_rng(314)
    for _ in range(2000):
        n = int(rng.integers(2, 7))
        a = rng.standard_normal((n, n))
        b = rng.standard_normal((n, n))
        lhs = np.linalg.norm(commutator(a, b)) ** 2
        rhs = 2.0 * np.linalg.norm(a) ** 2 * np.linalg.norm(b) ** 2
        assert lhs <= rhs * (1.0 + 1e-12)


def test_eigen_diagonal_matrix_exact():
    d = np.diag([3.0, -1.0, 7.0, 0.0])
    res = sym_eigen(d)
    assert np.array_equal(res.values, [7.0, 3.0, 0.0, -1.0])
    # eigenvectors are signed permutation columns
    assert np.allclose(np.abs(res.vectors), np.eye(4)[:, [2, 0, 3, 1]], atol=0.0)


def test_eigen_2x2_closed_form():
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    res = sym_eigen(a)
    assert np.allclose(res.values, [3.0, 1.0], atol=1e-14)
    assert np.allclose(np.abs(res.vectors[:, 0]), [np.sqrt(0.5)] * 2, atol=1e-14)


def test_eigen_reconstruction_fuzz():
    # 1e4 seeded draws, n <= 8: reconstruction within 1e-10 (1 + ||A||),
    # values against the LAPACK route as an independent oracle
    rng = np.random.default_rng(2718)
    for trial in range(10_000):
        n = int(rng.integers(1, 9))
        scale = 10.0 ** rng.uniform(-3, 3)
        a = random_symmetric(rng, n, scale=scale)
        norm_a = np.linalg.norm(a)
        res = sym_eigen(a)
        q, lam = res.vectors, res.values
        rec = np.max(np.abs(q @ np.diag(lam) @ q.T - a))
        assert rec < 1e-10 * (1.0 + norm_a), f"trial {trial}"
        want = np.linalg.eigvalsh(a)[::-1]
        assert np.max(np.abs(lam - want)) < 1e-12 * (1.0 + norm_a), f"trial {trial}"


def test_eigen_orthogonality():
    rng = np.random.default_rng(99)
    for _ in range(300):
        n = int(rng.integers(2, 9))
        a = random_symmetric(rng, n)
        res = sym_eigen(a)
        q = res.vectors
        assert np.max(np.abs(q.T @ q - np.eye(n))) < 1e-13


def test_eigen_shift_invariance():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        a = random_symmetric(rng, n)
        c = float(rng.uniform(-5, 5))
        v0 = sym_eigen(a).values
        v1 = sym_eigen(a + c * np.eye(n)).values
        assert np.max(np.abs(v1 - (v0 + c))) < 1e-12


def test_eigen_deterministic():
    rng = np.random.default_rng(17)
    a = random_symmetric(rng, 6)
    r1 = sym_eigen(a.copy())
    r2 = sym_eigen(a.copy())
    assert np.array_equal(r1.values, r2.values)
    assert np.array_equal(r1.vectors, r2.vectors)


def test_eigen_descending_with_ties():
    a = np.diag([2.0, 2.0, 1.0])
    res = sym_eigen(a)
    assert np.array_equal(res.values, [2.0, 2.0, 1.0])


def test_eigen_named_examples():
    assert np.array_equal(sym_eigen(np.diag([3.0, 1.0, 2.0])).values, [3.0, 2.0, 1.0])
    assert np.array_equal(sym_eigen(np.zeros((4, 4))).values, np.zeros(4))


def test_eigen_convergence_error():
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(RuntimeError):
        sym_eigen(a, max_sweeps=0)


def test_eigen_input_not_mutated():
    a = np.array([[1.0, 0.5], [0.5, 2.0]])
    keep = a.copy()
    sym_eigen(a)
    assert np.array_equal(a, keep)
