"""Dense symmetric-matrix kernel.

Hilbert-Schmidt inner products, commutators, and a deterministic cyclic
Jacobi eigensolver.  Everything downstream (fundamental matrices, spectra,
the commutator-norm bound) is built on these four functions, so they stay
dependency-free apart from numpy arrays.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

# Off-diagonal convergence threshold, relative to 1 + ||A||_F.
JACOBI_TOL = 1e-14
MAX_SWEEPS = 100


def symmetrize(a) -> np.ndarray:
    """Validated symmetric copy of a square matrix (entries averaged)."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return (a + a.T) / 2.0


def frobenius_inner(a, b) -> float:
    """Hilbert-Schmidt inner product <A, B> = sum_ij A_ij B_ij."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.sum(a * b))


def frobenius_norm(a) -> float:
    return math.sqrt(frobenius_inner(a, a))


def commutator(a, b) -> np.ndarray:
    """[A, B] = AB - BA."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


class EigenResult(NamedTuple):
    values: np.ndarray   # descending
    vectors: np.ndarray  # columns, matching order


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def sym_eigen(a, max_sweeps: int = MAX_SWEEPS) -> EigenResult:
    """Eigendecomposition by cyclic Jacobi rotations.

    Sweeps pivots in fixed row order (0,1), (0,2), ..., (n-2,n-1) until the
    off-diagonal Frobenius norm drops below JACOBI_TOL * (1 + ||A||_F), so the
    result is deterministic for a given input.  Eigenvalues are returned in
    descending order with stable tie ordering.
    """
    a = symmetrize(a)
    n = a.shape[0]
    stop = JACOBI_TOL * (1.0 + float(np.linalg.norm(a)))
    q = np.eye(n)
    for _ in range(max_sweeps + 1):
        if _offdiag_norm(a) < stop:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if apr == 0.0:
                    continue
                tau = (a[r, r] - a[p, p]) / (2.0 * apr)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # A <- J^T A J with J the rotation in the (p, r) plane.
                col_p, col_r = a[:, p].copy(), a[:, r].copy()
                a[:, p] = c * col_p - s * col_r
                a[:, r] = s * col_p + c * col_r
                row_p, row_r = a[p, :].copy(), a[r, :].copy()
                a[p, :] = c * row_p - s * row_r
                a[r, :] = s * row_p + c * row_r
                a[p, r] = a[r, p] = 0.0
                q_p, q_r = q[:, p].copy(), q[:, r].copy()
                q[:, p] = c * q_p - s * q_r
                q[:, r] = s * q_p + c * q_r
    else:
        raise RuntimeError(f"Jacobi sweeps did not converge within {max_sweeps} sweeps")
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return EigenResult(values[order], q[:, order])
