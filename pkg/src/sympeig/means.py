"""Riemannian geometry of the positive definite cone: distance, geodesics,
the two-matrix geometric mean, and the weighted Karcher mean.

The Karcher mean is computed in two phases: a cyclic inductive walk that
contracts towards the minimizer, followed by a fixed-point polish of the
barycenter equation sum_j w_j log(X^{1/2} A_j^{-1} X^{1/2}) = 0 whose residual
is the reported convergence certificate.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError, InputError
from .matfun import SYMTOL, symmetrize


def _validate_spd(A: np.ndarray, symtol: float = SYMTOL) -> np.ndarray:
    """Symmetric positive definite validation (any order; the even-order
    requirement is a property of symplectic inputs, not of the geometry)."""
    A = symmetrize(A, symtol, name="positive definite matrix")
    wmin = float(np.linalg.eigvalsh(A)[0])
    if wmin <= 0.0:
        raise DomainError(f"matrix is not positive definite: lambda_min = {wmin:.6e}")
    return A


def _sqrt_pair(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
    """(A^{1/2}, A^{-1/2}, operator norm of A) from one eigendecomposition."""
    w, Q = np.linalg.eigh(A)
    if w[0] <= 0.0:
        raise DomainError(f"matrix is not positive definite: lambda_min = {w[0]:.6e}")
    root = np.sqrt(w)
    return (Q * root) @ Q.T, (Q * (1.0 / root)) @ Q.T, float(w[-1])


def _sym_log(S: np.ndarray) -> np.ndarray:
    w, Q = np.linalg.eigh((S + S.T) / 2.0)
    if w[0] <= 0.0:
        raise DomainError(f"logarithm of a non positive definite matrix: lambda_min = {w[0]:.6e}")
    return (Q * np.log(w)) @ Q.T


def _sym_exp(S: np.ndarray) -> np.ndarray:
    w, Q = np.linalg.eigh((S + S.T) / 2.0)
    return (Q * np.exp(w)) @ Q.T


def validate_weights(w, m: int) -> np.ndarray:
    """Positive weights of length m summing to 1 within 1e-12."""
    w = np.asarray(w, dtype=float)
    if w.shape != (m,):
        raise InputError(f"expected {m} weights, got shape {w.shape}")
    if np.any(w <= 0.0):
        raise InputError("weights must all be positive")
    if abs(float(w.sum()) - 1.0) > 1e-12:
        raise InputError(f"weights must sum to 1, got {float(w.sum()):.17g}")
    return w


def riemannian_distance(A: np.ndarray, B: np.ndarray, symtol: float = SYMTOL) -> float:
    """Affine-invariant Riemannian distance
    delta(A, B) = (sum_i log^2 lambda_i(A^{-1} B))^{1/2}."""
    A = _validate_spd(A, symtol)
    B = _validate_spd(B, symtol)
    if A.shape != B.shape:
        raise InputError(f"order mismatch: {A.shape[0]} vs {B.shape[0]}")
    lam = scipy.linalg.eigh(B, A, eigvals_only=True)
    return float(np.sqrt(np.sum(np.log(lam) ** 2)))


def geodesic(A: np.ndarray, B: np.ndarray, t: float, symtol: float = SYMTOL) -> np.ndarray:
    """Point A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2} on the geodesic
    from A (t = 0) to B (t = 1).

    Raises
    ------
    InputError
        If t is outside [0, 1] (extrapolation is out of scope) or the orders
        differ.
    """
    if not 0.0 <= t <= 1.0:
        raise InputError(f"geodesic parameter must lie in [0, 1], got {t}")
    A = _validate_spd(A, symtol)
    B = _validate_spd(B, symtol)
    if A.shape != B.shape:
        raise InputError(f"order mismatch: {A.shape[0]} vs {B.shape[0]}")
    if t == 0.0:
        return A
    if t == 1.0:
        return B
    Ah, Aih, _ = _sqrt_pair(A)
    mid = Aih @ B @ Aih
    w, Q = np.linalg.eigh((mid + mid.T) / 2.0)
    powed = (Q * np.maximum(w, 0.0) ** t) @ Q.T
    out = Ah @ powed @ Ah
    return (out + out.T) / 2.0


def geometric_mean(A: np.ndarray, B: np.ndarray, symtol: float = SYMTOL) -> np.ndarray:
    """Geometric mean A # B, the midpoint of the geodesic from A to B."""
    return geodesic(A, B, 0.5, symtol)


@dataclass(frozen=True)
class KarcherResult:
    """Karcher mean solve outcome.

    ``residual`` is the Frobenius norm of
    sum_j w_j log(mean^{1/2} A_j^{-1} mean^{1/2}) at the returned mean;
    ``converged`` is False when the iteration budget ran out, in which case
    the best iterate found is still returned.
    """

    mean: np.ndarray
    residual: float
    iterations: int
    converged: bool


def karcher_residual(X: np.ndarray, mats, weights=None, symtol: float = SYMTOL) -> float:
    """Frobenius norm of sum_j w_j log(X^{1/2} A_j^{-1} X^{1/2})."""
    X = _validate_spd(X, symtol)
    mats = [_validate_spd(A, symtol) for A in mats]
    for A in mats:
        if A.shape != X.shape:
            raise InputError(f"order mismatch: {A.shape[0]} vs {X.shape[0]}")
    m = len(mats)
    w = np.full(m, 1.0 / m) if weights is None else validate_weights(weights, m)
    invs = [np.linalg.inv(A) for A in mats]
    Xh, _, _ = _sqrt_pair(X)
    grad = _weighted_log_sum(Xh, invs, w)
    return float(np.linalg.norm(grad))


def _weighted_log_sum(Xh: np.ndarray, invs, w: np.ndarray) -> np.ndarray:
    total = np.zeros_like(Xh)
    for wj, inv in zip(w, invs):
        total += wj * _sym_log(Xh @ inv @ Xh)
    return total


def karcher_mean(
    mats,
    weights=None,
    tol: float | None = None,
    max_iter: int = 200,
    walk_steps: int | None = None,
    symtol: float = SYMTOL,
) -> KarcherResult:
    """Weighted Karcher (Riemannian barycenter) mean of positive definite
    matrices.

    Phase 1 runs the cyclic inductive walk S <- S #_t A_j with step
    t = w_j / (weight seen so far including the current visit), which reduces
    to the classical 1/(k+1) stepping for uniform weights, for
    ``walk_steps`` visits (default 30 m). Phase 2 polishes with the fixed
    point iteration X <- X^{1/2} exp(-theta * grad) X^{1/2} where grad is the
    weighted log-sum, starting at theta = 1, halving theta whenever the
    residual would increase and growing it gently after accepted steps
    (spread-out inputs are badly under-relaxed at theta = 1).

    Parameters
    ----------
    mats : sequence of ndarray
        m >= 1 positive definite matrices of equal order.
    weights : sequence of float, optional
        Positive weights summing to 1; uniform when omitted.
    tol : float, optional
        Residual target. Defaults to 1e-9 times the operator norm of the
        current iterate.

    Returns
    -------
    KarcherResult
        With ``converged=False`` and the best iterate when the budget of
        ``max_iter`` polish iterations is exhausted.
    """
    mats = [_validate_spd(A, symtol) for A in mats]
    if not mats:
        raise InputError("need at least one matrix")
    for A in mats[1:]:
        if A.shape != mats[0].shape:
            raise InputError(f"order mismatch: {A.shape[0]} vs {mats[0].shape[0]}")
    m = len(mats)
    w = np.full(m, 1.0 / m) if weights is None else validate_weights(weights, m)
    if m == 1:
        return KarcherResult(mean=mats[0], residual=0.0, iterations=0, converged=True)

    steps = 30 * m if walk_steps is None else walk_steps
    X = mats[0]
    seen = w[0]
    for k in range(1, steps):
        j = k % m
        t = w[j] / (seen + w[j])
        X = geodesic(X, mats[j], t, symtol)
        seen += w[j]

    invs = [np.linalg.inv(A) for A in mats]

    def _state(X):
        Xh, Xih, opnorm = _sqrt_pair(X)
        grad = _weighted_log_sum(Xh, invs, w)
        return Xh, grad, float(np.linalg.norm(grad)), opnorm

    Xh, grad, resid, opnorm = _state(X)
    target = (1e-9 * opnorm) if tol is None else tol
    theta = 1.0
    iterations = 0
    while resid > target and iterations < max_iter:
        step = Xh @ _sym_exp(-theta * grad) @ Xh
        step = (step + step.T) / 2.0
        new_Xh, new_grad, new_resid, new_opnorm = _state(step)
        if new_resid >= resid and theta > 1e-8:
            theta /= 2.0
        else:
            X, Xh, grad, resid, opnorm = step, new_Xh, new_grad, new_resid, new_opnorm
            theta = min(theta * 1.2, 8.0)
            if tol is None:
                target = 1e-9 * opnorm
        iterations += 1
    return KarcherResult(mean=X, residual=resid, iterations=iterations, converged=resid <= target)
