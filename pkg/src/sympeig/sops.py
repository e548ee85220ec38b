"""Structural operations adapted to the symplectic block layout: s-direct
sums, s-pinchings, and s-principal submatrices.

Each of these acts simultaneously on the four n x n quadrants of a 2n x 2n
matrix, which is what keeps the symplectic structure (and positive
definiteness) intact.
"""

import numpy as np
import scipy.linalg

from .errors import InputError
from .matfun import SYMTOL, require_square
from .symplectic import validate_symplectic
from .williamson import validate_posdef


def _quadrants(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    n = A.shape[0] // 2
    return A[:n, :n], A[:n, n:], A[n:, :n], A[n:, n:]


def validate_partition(sizes, n: int) -> tuple[int, ...]:
    """Positive block sizes summing to the half-order n."""
    sizes = tuple(int(s) for s in sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise InputError(f"partition sizes must be positive integers, got {sizes}")
    if sum(sizes) != n:
        raise InputError(f"partition {sizes} does not sum to the half-order {n}")
    return sizes


def _validate_kind(A: np.ndarray, kind: str) -> np.ndarray:
    if kind == "posdef":
        return validate_posdef(A)
    if kind == "symplectic":
        return validate_symplectic(A)
    raise InputError(f"kind must be 'posdef' or 'symplectic', got {kind!r}")


def s_direct_sum(mats, kind: str = "posdef") -> np.ndarray:
    """s-direct sum: the four quadrants of the result are the ordinary direct
    sums of the inputs' quadrants.

    All inputs must validate as the declared ``kind``; the s-direct sum of
    symplectic matrices is symplectic, of positive definite matrices positive
    definite, and the symplectic spectrum of the result is the multiset union
    of the inputs' spectra.
    """
    mats = [_validate_kind(require_square(A, "s-direct sum input"), kind) for A in mats]
    if not mats:
        raise InputError("need at least one matrix")
    quads = [_quadrants(A) for A in mats]
    return np.block(
        [
            [scipy.linalg.block_diag(*(q[0] for q in quads)), scipy.linalg.block_diag(*(q[1] for q in quads))],
            [scipy.linalg.block_diag(*(q[2] for q in quads)), scipy.linalg.block_diag(*(q[3] for q in quads))],
        ]
    )


def _partition_mask(sizes: tuple[int, ...], n: int) -> np.ndarray:
    mask = np.zeros((n, n), dtype=bool)
    start = 0
    for s in sizes:
        mask[start : start + s, start : start + s] = True
        start += s
    return mask


def s_pinching(A: np.ndarray, sizes, symtol: float = SYMTOL) -> np.ndarray:
    """Apply the block-diagonal pinching along ``sizes`` to each quadrant.

    Idempotent for a fixed partition; the result equals the s-direct sum of
    the s-principal submatrices along the partition and is positive definite
    whenever A is.
    """
    A = validate_posdef(A, symtol)
    n = A.shape[0] // 2
    sizes = validate_partition(sizes, n)
    mask = _partition_mask(sizes, n)
    full = np.block([[mask, mask], [mask, mask]])
    return np.where(full, A, 0.0)


def s_principal_submatrix(A: np.ndarray, keep, symtol: float = SYMTOL) -> np.ndarray:
    """Keep the rows/columns i and n+i for i in ``keep`` (0-based), deleting
    both members of every dropped index pair.

    The result is positive definite of half-order len(keep). The CLI exposes
    this with 1-based indices.
    """
    A = validate_posdef(A, symtol)
    n = A.shape[0] // 2
    idx = sorted(set(int(i) for i in keep))
    if not idx:
        raise InputError("keep must contain at least one index")
    if idx[0] < 0 or idx[-1] >= n:
        raise InputError(f"keep indices must lie in [0, {n - 1}], got {idx}")
    sel = idx + [n + i for i in idx]
    return A[np.ix_(sel, sel)]
