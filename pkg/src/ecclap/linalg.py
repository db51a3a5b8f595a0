"""Dense real symmetric matrices and a cyclic Jacobi eigenvalue solver.

The solver works on a stack of same-size matrices at once: every plane
rotation ``(p, q)`` is applied to all still-unconverged matrices in the
stack in one vectorized step. A single matrix is a stack of one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvergenceError",
    "DEFAULT_TOL",
    "MAX_SWEEPS",
    "Spectrum",
    "SymmetricMatrix",
    "eigenvalues",
    "eigenvalues_batch",
    "frobenius_sq",
    "trace",
]

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi sweeps hit the cap before the off-diagonal norm fell below tolerance."""


class SymmetricMatrix:
    """Read-only dense real symmetric matrix.

    The input must be square, finite and exactly symmetric.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")
        a.setflags(write=False)
        self._a = a

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._a

    def __getitem__(self, idx):
        return self._a[idx]

    def __eq__(self, other):
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __repr__(self):
        return f"SymmetricMatrix({self._a.tolist()})"

    def tolist(self) -> list[list[float]]:
        return self._a.tolist()

    def permuted(self, perm) -> "SymmetricMatrix":
        """``P M P^T`` where ``P`` sends basis vector ``i`` to ``perm[i]``."""
        inv = np.argsort(perm)
        return SymmetricMatrix(self._a[np.ix_(inv, inv)])


def trace(m: SymmetricMatrix) -> float:
    return float(np.trace(m.array))


def frobenius_sq(m: SymmetricMatrix) -> float:
    return float(np.sum(m.array * m.array))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the achieved off-diagonal norm."""

    values: tuple[float, ...]
    residual: float
    sweeps: int

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def multiset_close(self, other, tol: float) -> bool:
        other = sorted(other, reverse=True)
        return len(other) == len(self.values) and all(
            abs(a - b) <= tol for a, b in zip(self.values, other)
        )


def _off_norm(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    off = a * (1.0 - np.eye(n))
    return np.sqrt(np.sum(off * off, axis=(-2, -1)))


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    """Annihilate ``a[:, p, q]`` in place by one Jacobi rotation per matrix."""
    apq = a[:, p, q]
    active = apq != 0.0
    if not active.any():
        return
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        theta = np.where(active, (a[:, q, q] - a[:, p, p]) / (2.0 * apq), 0.0)
        sign = np.where(theta >= 0.0, 1.0, -1.0)
        t = np.where(active, sign / (np.abs(theta) + np.hypot(theta, 1.0)), 0.0)
    t = np.nan_to_num(t, nan=0.0, posinf=0.0, neginf=0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    cc, ss = c[:, None], s[:, None]

    col_p = a[:, :, p].copy()
    col_q = a[:, :, q]
    a[:, :, p] = cc * col_p - ss * col_q
    a[:, :, q] = ss * col_p + cc * col_q
    row_p = a[:, p, :].copy()
    row_q = a[:, q, :]
    a[:, p, :] = cc * row_p - ss * row_q
    a[:, q, :] = ss * row_p + cc * row_q

    idx = np.flatnonzero(active)
    a[idx, p, q] = 0.0
    a[idx, q, p] = 0.0


def eigenvalues_batch(stack, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigenvalues of each symmetric matrix in a ``(k, n, n)`` stack.

    Returns ``(values, residuals, sweeps)``: values sorted descending per
    row, the final off-diagonal Frobenius norm of each matrix, and the number
    of sweeps each one needed. A matrix is converged once its off-diagonal
    norm drops below ``tol * max(1, ||M||_F)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(stack, dtype=float)
    if a.ndim == 2:
        a = a[None]
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected a (k, n, n) stack, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    k, n, _ = a.shape
    limit = tol * np.maximum(1.0, np.sqrt(np.sum(a * a, axis=(1, 2))))
    residuals = _off_norm(a)
    sweeps = np.zeros(k, dtype=int)
    active = np.flatnonzero(residuals >= limit)
    done = 0
    while active.size:
        if done == max_sweeps:
            raise ConvergenceError(
                f"{active.size} matrix(es) not converged after {max_sweeps} sweeps "
                f"(worst off-diagonal norm {residuals[active].max():.3e})"
            )
        sub = a[active]
        for q in range(1, n):
            for p in range(q):
                _rotate(sub, p, q)
        a[active] = sub
        done += 1
        sweeps[active] = done
        residuals[active] = _off_norm(sub)
        active = active[residuals[active] >= limit[active]]
    values = -np.sort(-np.diagonal(a, axis1=1, axis2=2), axis=1)
    return values, residuals, sweeps


def eigenvalues(m: SymmetricMatrix, tol: float = DEFAULT_TOL,
                max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    values, residuals, sweeps = eigenvalues_batch(m.array[None], tol, max_sweeps)
    return Spectrum(tuple(float(v) for v in values[0]), float(residuals[0]), int(sweeps[0]))
