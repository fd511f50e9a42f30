"""Finite-matrix linearizations of the rational symbol.

A scalar mode (alpha, beta) with an N-term kernel admits three equivalent
matrix realizations: the (N+1)-square block function with coupling entries
sqrt(a_j b_j beta), its (N+2)-square first-companion linearization, and a
constant (N+2)-square system operator whose characteristic polynomial is the
cleared mode polynomial up to the sign (-1)^(N+2).  The module also carries a
1D finite-difference realization for spatially graded damping, solved through
a block companion matrix of the cleared matrix polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npp
import scipy.linalg

from .errors import RootFindingError
from .kernel import ExponentialKernel
from .records import EigenvalueRecord
from .scalar import ModeCoefficients

_LIFT_TOL = 1e-6


@dataclass(frozen=True)
class ModePencil:
    """Matrix realizations of one scalar mode of the rational symbol."""

    alpha: float
    beta: float
    kernel: ExponentialKernel

    def __post_init__(self):
        ModeCoefficients(self.alpha, self.beta)  # reuse the validation

    @property
    def n_terms(self) -> int:
        return self.kernel.n_terms

    @property
    def size(self) -> int:
        return self.n_terms + 2

    def coupling(self) -> np.ndarray:
        """Row of coupling entries sqrt(a_j b_j beta)."""
        a = np.asarray(self.kernel.amplitudes)
        b = np.asarray(self.kernel.rates)
        return np.sqrt(a * b * self.beta)

    def block_function(self, lam: complex) -> np.ndarray:
        """(N+1)-square block matrix [[alpha + lam^2, B], [B^T, D + lam]]."""
        n = self.n_terms
        big = np.zeros((n + 1, n + 1), dtype=complex)
        big[0, 0] = self.alpha + lam * lam
        cpl = self.coupling()
        big[0, 1:] = cpl
        big[1:, 0] = cpl
        big[np.arange(1, n + 1), np.arange(1, n + 1)] = (
            np.asarray(self.kernel.rates) + lam
        )
        return big

    def linearization(self, lam: complex) -> np.ndarray:
        """(N+2)-square companion-style linearization of the block function."""
        n = self.n_terms
        big = np.zeros((n + 2, n + 2), dtype=complex)
        cpl = self.coupling()
        big[0, 0] = -lam
        big[0, 1] = -self.alpha
        big[0, 2:] = -cpl
        big[1, 0] = 1.0
        big[1, 1] = -lam
        big[2:, 1] = cpl
        big[np.arange(2, n + 2), np.arange(2, n + 2)] = (
            np.asarray(self.kernel.rates) + lam
        )
        return big

    def _padded_block(self, lam: complex) -> np.ndarray:
        """Block function padded with the trivial block -lam (order H, Dhat, W)."""
        n = self.n_terms
        big = np.zeros((n + 2, n + 2), dtype=complex)
        big[: n + 1, : n + 1] = self.block_function(lam)
        big[n + 1, n + 1] = -lam
        return big

    def _padded_swapped(self, lam: complex) -> np.ndarray:
        """Padded block function with the trivial block in the middle."""
        n = self.n_terms
        big = np.zeros((n + 2, n + 2), dtype=complex)
        cpl = self.coupling()
        big[0, 0] = self.alpha + lam * lam
        big[0, 2:] = cpl
        big[2:, 0] = cpl
        big[1, 1] = -lam
        big[np.arange(2, n + 2), np.arange(2, n + 2)] = (
            np.asarray(self.kernel.rates) + lam
        )
        return big

    def equivalence_residual(self, lam: complex) -> float:
        """Max entrywise residual of the two extension-equivalence identities.

        The permutation identity relating the two padded block functions is
        always checked; the factorization through the linearization needs the
        middle factor block -lam to be invertible and is skipped at lam = 0.
        """
        n = self.n_terms
        perm = np.zeros((n + 2, n + 2))
        perm[0, 0] = 1.0
        perm[1, n + 1] = 1.0
        perm[np.arange(2, n + 2), np.arange(1, n + 1)] = 1.0
        lhs = self._padded_swapped(lam)
        res = float(
            np.max(np.abs(perm @ self._padded_block(lam) @ perm.T - lhs))
        )
        if lam != 0:
            left = np.zeros((n + 2, n + 2), dtype=complex)
            left[0, 0] = -1.0
            left[0, 1] = -lam
            left[1, 1] = -lam
            left[np.arange(2, n + 2), np.arange(2, n + 2)] = 1.0
            right = np.zeros((n + 2, n + 2), dtype=complex)
            right[0, 0] = lam
            right[0, 1] = 1.0
            right[1, 0] = 1.0
            right[np.arange(2, n + 2), np.arange(2, n + 2)] = 1.0
            res2 = np.max(np.abs(left @ self.linearization(lam) @ right - lhs))
            res = max(res, float(res2))
        return res

    def system_operator(self) -> np.ndarray:
        """Constant (N+2)-square matrix with char poly = +-(cleared symbol)."""
        n = self.n_terms
        big = np.zeros((n + 2, n + 2))
        cpl = self.coupling()
        big[0, 1] = 1.0
        big[1, 0] = -self.alpha
        big[1, 2:] = -cpl
        big[2:, 0] = -cpl
        big[np.arange(2, n + 2), np.arange(2, n + 2)] = -np.asarray(
            self.kernel.rates
        )
        return big

    def _symbol_value(self, lam: complex) -> complex:
        from .scalar import rational_symbol

        return rational_symbol(
            self.kernel, ModeCoefficients(self.alpha, self.beta), lam
        )

    def lift_to_block(self, lam: complex, v1: complex) -> np.ndarray:
        """Eigenvector [v1, -(b_j + lam)^-1 B_j v1] of the block function."""
        if v1 == 0:
            raise ValueError("v1 must be nonzero")
        rates = np.asarray(self.kernel.rates)
        if np.min(np.abs(rates + lam)) < 1e-12:
            raise ValueError(f"lam = {lam} is at a kernel pole")
        if abs(self._symbol_value(lam)) * abs(v1) > _LIFT_TOL * (1.0 + self.alpha):
            raise ValueError(
                f"lam = {lam} is not an eigenvalue of the scalar symbol"
            )
        v = np.empty(self.n_terms + 1, dtype=complex)
        v[0] = v1
        v[1:] = -self.coupling() / (rates + lam) * v1
        return v

    def lift_to_linearization(self, lam: complex, v23: np.ndarray) -> np.ndarray:
        """Eigenvector [lam*v2, v2, v3] of the linearization."""
        v23 = np.asarray(v23, dtype=complex)
        if v23.shape != (self.n_terms + 1,):
            raise ValueError(f"expected length {self.n_terms + 1} vector")
        norm = np.linalg.norm(v23)
        if norm == 0.0:
            raise ValueError("zero vector cannot be lifted")
        res = np.linalg.norm(self.block_function(lam) @ v23)
        if res > _LIFT_TOL * (1.0 + self.alpha) * norm:
            raise ValueError(
                f"input is not a block-function eigenvector (residual {res})"
            )
        return np.concatenate(([lam * v23[0]], v23))


def dense_eigenvalues(mat: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """All eigenvalues of a dense square matrix, residual-checked.

    For every returned mu there is an eigenvector v with
    ||(M - mu) v|| <= tol * ||M||.  Sorted by (re, im).
    """
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"matrix must be square, got shape {mat.shape}")
    if mat.shape[0] > 2000:
        raise ValueError(f"size {mat.shape[0]} exceeds the dense limit 2000")
    vals, vecs = scipy.linalg.eig(mat)
    scale = np.linalg.norm(mat, 2) or 1.0
    resid = np.linalg.norm(mat @ vecs - vecs * vals[None, :], axis=0)
    bad = resid > tol * scale
    if bad.any():
        raise RootFindingError(
            f"eigenvalue residuals {resid[bad]} exceed {tol * scale}",
            best=vals,
        )
    order = np.lexsort((vals.imag, vals.real))
    return vals[order]


def discretize_1d(a: float, b_values, n_points: int,
                  length: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Three-point Dirichlet stencils (A, A_b) on a uniform interior grid.

    ``b_values`` holds the damping profile at the interior nodes; face values
    are arithmetic means of adjacent nodes, with one-sided values at the
    boundary.  A is symmetric positive definite, A_b symmetric positive
    semi-definite, and a constant profile gives A_b = b * A exactly.
    """
    if n_points < 3:
        raise ValueError(f"need at least 3 grid points, got {n_points}")
    b_values = np.asarray(b_values, dtype=float)
    if b_values.shape != (n_points,):
        raise ValueError(
            f"profile must have one value per node, got shape {b_values.shape}"
        )
    if not np.all(np.isfinite(b_values)) or np.any(b_values < 0.0):
        raise ValueError("profile values must be finite and nonnegative")
    h = length / (n_points + 1)
    w = a / (h * h)
    main = np.full(n_points, 2.0 * w)
    off = np.full(n_points - 1, -w)
    mat_a = np.diag(main) + np.diag(off, 1) + np.diag(off, -1)
    faces = np.empty(n_points + 1)
    faces[0] = b_values[0]
    faces[-1] = b_values[-1]
    faces[1:-1] = 0.5 * (b_values[:-1] + b_values[1:])
    main_b = w * (faces[:-1] + faces[1:])
    off_b = -w * faces[1:-1]
    mat_b = np.diag(main_b) + np.diag(off_b, 1) + np.diag(off_b, -1)
    return mat_a, mat_b


def _cleared_matrix_coeffs(mat_a: np.ndarray, mat_b: np.ndarray,
                           k: ExponentialKernel) -> list[np.ndarray]:
    """Ascending coefficient matrices of the monic cleared matrix polynomial."""
    n = k.n_terms
    m = mat_a.shape[0]
    rates = np.asarray(k.rates)
    full = npp.polyfromroots(-rates).real
    eye = np.eye(m)
    coeffs = [np.zeros((m, m)) for _ in range(n + 3)]
    for deg, c in enumerate(full):
        coeffs[deg + 2] += c * eye
        coeffs[deg] += c * mat_a
    for j, (a_j, b_j) in enumerate(zip(k.amplitudes, k.rates)):
        others = np.delete(rates, j)
        without = npp.polyfromroots(-others).real if others.size else np.array([1.0])
        for deg, c in enumerate(np.atleast_1d(without)):
            coeffs[deg] -= a_j * b_j * c * mat_b
    return coeffs


def nonlinear_eigenvalues_fd(mat_a: np.ndarray, mat_b: np.ndarray,
                             k: ExponentialKernel,
                             imag_cap: float = 50.0) -> list[EigenvalueRecord]:
    """Spectrum of the discretized rational symbol via block companion.

    Clears the kernel denominators into a monic matrix polynomial of degree
    N + 2, linearizes it into a block companion matrix, and filters spurious
    pole roots by a residual check on the original rational form.
    """
    m = mat_a.shape[0]
    d = k.n_terms + 2
    if d * m > 2000:
        raise ValueError(f"companion size {d * m} exceeds the dense limit 2000")
    coeffs = _cleared_matrix_coeffs(mat_a, mat_b, k)
    comp = np.zeros((d * m, d * m))
    for blk in range(d - 1):
        comp[blk * m:(blk + 1) * m, (blk + 1) * m:(blk + 2) * m] = np.eye(m)
    for blk in range(d):
        comp[(d - 1) * m:, blk * m:(blk + 1) * m] = -coeffs[blk]
    vals, vecs = scipy.linalg.eig(comp)
    scale = float(np.linalg.norm(mat_a, 2))
    records: list[EigenvalueRecord] = []
    for lam, vec in zip(vals, vecs.T):
        if abs(lam.imag) > imag_cap:
            continue
        blocks = vec.reshape(d, m)
        v = blocks[int(np.argmax(np.linalg.norm(blocks, axis=1)))]
        if min(abs(lam + b) for b in k.rates) < 1e-10:
            continue  # exact pole hit; always spurious
        res = np.linalg.norm(
            (lam * lam) * v + mat_a @ v - k.laplace(lam) * (mat_b @ v)
        ) / np.linalg.norm(v)
        if res > 1e-6 * scale:
            continue
        branch = "real" if lam.imag == 0.0 else "complex-pair"
        records.append(
            EigenvalueRecord(float(lam.real), float(lam.imag), "fd",
                             branch, float(res))
        )
    records.sort(key=lambda r: (r.re, r.im))
    return records
