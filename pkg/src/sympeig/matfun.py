"""Functional calculus for real symmetric matrices and basic matrix norms.

Every operation validates and symmetrizes its input once, then works with the
eigendecomposition. Fractional powers and logarithms refuse near-singular
input instead of regularizing it, so that downstream inequality margins are
never silently corrupted.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, InputError, NumericalError

# Default relative tolerance for reconstruction residuals.
RTOL = 1e-9
# Allowed relative asymmetry of "symmetric" inputs before they are rejected.
SYMTOL = 1e-8
# Fractional powers refuse matrices with lambda_min <= PD_RELCUT * lambda_max.
PD_RELCUT = 1e-12


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigendecomposition S = Q diag(eigenvalues) Q^T of a symmetric matrix.

    Attributes
    ----------
    eigenvalues : ndarray, shape (m,)
        Real eigenvalues in ascending order.
    eigenvectors : ndarray, shape (m, m)
        Orthogonal matrix whose columns are the matching eigenvectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


class NormTriple(NamedTuple):
    """Operator (spectral), Frobenius and trace (nuclear) norms."""

    operator: float
    frobenius: float
    trace: float


def require_square(X: np.ndarray, name: str = "matrix") -> np.ndarray:
    """Return X as a float array, raising InputError unless it is a finite
    square 2-d matrix."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise InputError(f"{name} must be square, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise InputError(f"{name} has non-finite entries")
    return X


def symmetrize(S: np.ndarray, symtol: float = SYMTOL, name: str = "matrix") -> np.ndarray:
    """Validate that S is symmetric within tolerance and return (S + S^T)/2.

    Parameters
    ----------
    S : array_like, shape (m, m)
        The candidate symmetric matrix.
    symtol : float
        Maximum allowed asymmetry, relative to max|S_ij|.

    Raises
    ------
    InputError
        If S is not square, not finite, or max|S_ij - S_ji| exceeds
        symtol * max|S_ij|.
    """
    S = require_square(S, name)
    scale = np.max(np.abs(S)) if S.size else 0.0
    asym = np.max(np.abs(S - S.T)) if S.size else 0.0
    if asym > symtol * max(scale, np.finfo(float).tiny):
        raise InputError(
            f"{name} is not symmetric: max asymmetry {asym:.3e} exceeds "
            f"{symtol:.1e} * max|entry| = {symtol * scale:.3e}"
        )
    return (S + S.T) / 2.0


def sym_eig(S: np.ndarray, symtol: float = SYMTOL) -> SpectralDecomposition:
    """Eigendecomposition of a real symmetric matrix.

    Parameters
    ----------
    S : array_like, shape (m, m)
        Symmetric matrix (asymmetry up to ``symtol`` relative is symmetrized
        away; more raises InputError).

    Returns
    -------
    SpectralDecomposition
        Ascending eigenvalues and an orthogonal eigenvector matrix.

    Raises
    ------
    InputError
        Non-symmetric or non-finite input.
    NumericalError
        If the underlying eigensolver fails to converge.
    """
    S = symmetrize(S, symtol)
    try:
        w, Q = np.linalg.eigh(S)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"symmetric eigensolver failed: {exc}") from exc
    return SpectralDecomposition(eigenvalues=w, eigenvectors=Q)


def _positive_spectrum(S: np.ndarray, symtol: float, op: str) -> SpectralDecomposition:
    dec = sym_eig(S, symtol)
    w = dec.eigenvalues
    wmin, wmax = w[0], w[-1]
    if wmin <= 0.0:
        raise DomainError(f"{op} requires a positive definite matrix; lambda_min = {wmin:.6e}")
    if wmin <= PD_RELCUT * wmax:
        raise DomainError(
            f"{op} refuses near-singular input: lambda_min = {wmin:.6e} <= "
            f"{PD_RELCUT:.0e} * lambda_max = {PD_RELCUT * wmax:.6e}"
        )
    return dec


def sym_pow(S: np.ndarray, t: float, symtol: float = SYMTOL) -> np.ndarray:
    """Fractional power S^t of a symmetric positive definite matrix.

    Computed as Q diag(lambda^t) Q^T. ``sym_pow(S, 1) == S`` and
    ``sym_pow(S, 0) == I`` up to roundoff.

    Raises
    ------
    DomainError
        If S is not positive definite, or lambda_min <= 1e-12 * lambda_max
        (near-singular input is refused rather than regularized).
    """
    dec = _positive_spectrum(S, symtol, "sym_pow")
    w, Q = dec.eigenvalues, dec.eigenvectors
    return (Q * w**t) @ Q.T


def sym_log(S: np.ndarray, symtol: float = SYMTOL) -> np.ndarray:
    """Matrix logarithm of a symmetric positive definite matrix."""
    dec = _positive_spectrum(S, symtol, "sym_log")
    w, Q = dec.eigenvalues, dec.eigenvectors
    return (Q * np.log(w)) @ Q.T


def sym_exp(S: np.ndarray, symtol: float = SYMTOL) -> np.ndarray:
    """Matrix exponential of a symmetric matrix (always positive definite)."""
    dec = sym_eig(S, symtol)
    w, Q = dec.eigenvalues, dec.eigenvectors
    return (Q * np.exp(w)) @ Q.T


def polar(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Polar decomposition M = O P with O orthogonal and P = (M^T M)^{1/2}.

    Returns
    -------
    (O, P) : pair of ndarray
        Orthogonal factor and symmetric positive definite factor.

    Raises
    ------
    DomainError
        If M is singular (smallest singular value at relative tolerance 0).
    """
    M = require_square(M, "polar input")
    U, s, Vt = np.linalg.svd(M)
    if s[-1] <= PD_RELCUT * s[0]:
        raise DomainError(f"polar requires an invertible matrix; smallest singular value {s[-1]:.6e}")
    O = U @ Vt
    P = (Vt.T * s) @ Vt
    return O, (P + P.T) / 2.0


def matrix_abs(X: np.ndarray) -> np.ndarray:
    """Matrix absolute value |X| = (X^T X)^{1/2}, positive semidefinite."""
    X = require_square(X, "matrix_abs input")
    _, s, Vt = np.linalg.svd(X)
    A = (Vt.T * s) @ Vt
    return (A + A.T) / 2.0


def norms(X: np.ndarray) -> NormTriple:
    """Operator, Frobenius and trace norms of a square matrix.

    The operator norm is the largest singular value, the trace norm the sum
    of all singular values.
    """
    X = require_square(X, "norms input")
    s = np.linalg.svd(X, compute_uv=False)
    return NormTriple(
        operator=float(s[0]),
        frobenius=float(np.sqrt(np.sum(X * X))),
        trace=float(np.sum(s)),
    )
