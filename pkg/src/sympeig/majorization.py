"""Vector pre-order predicates: log-majorization, weak majorization and
supermajorization, with signed margins.

All log-majorization arithmetic happens in log space so that products of many
entries cannot overflow; its tolerance is therefore absolute in log space.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InputError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class MajorizationVerdict:
    """holds is equivalent to worst_margin >= -tol; failing_index is the
    1-based prefix length of the worst violated inequality (None when the
    relation holds)."""

    holds: bool
    worst_margin: float
    failing_index: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def _vector(x, name: str, positive: bool = False) -> np.ndarray:
    x = np.asarray(x, dtype=float).ravel()
    if x.size == 0:
        raise InputError(f"{name} must be nonempty")
    if not np.all(np.isfinite(x)):
        raise DomainError(f"{name} has non-finite entries")
    if positive and np.any(x <= 0.0):
        raise DomainError(f"{name} must be entrywise positive")
    return x


def _pair(y, x, positive: bool = False) -> tuple[np.ndarray, np.ndarray]:
    y = _vector(y, "y", positive)
    x = _vector(x, "x", positive)
    if x.shape != y.shape:
        raise InputError(f"length mismatch: {x.size} vs {y.size}")
    return y, x


def _verdict(margins: np.ndarray, tol: float) -> MajorizationVerdict:
    worst = int(np.argmin(margins))
    worst_margin = float(margins[worst])
    holds = worst_margin >= -tol
    return MajorizationVerdict(
        holds=holds,
        worst_margin=worst_margin,
        failing_index=None if holds else worst + 1,
    )


def log_majorizes(y, x, tol: float = DEFAULT_TOL) -> MajorizationVerdict:
    """Test x ≺_log y: every top-k product of x is at most that of y, and the
    full products agree.

    Margins are differences of cumulative logs; the final coordinate carries
    the equality constraint as -(absolute log-product gap), so worst_margin
    is 0 for x = y and the verdict holds iff worst_margin >= -tol.
    """
    y, x = _pair(y, x, positive=True)
    cx = np.cumsum(np.log(np.sort(x)[::-1]))
    cy = np.cumsum(np.log(np.sort(y)[::-1]))
    margins = cy - cx
    margins[-1] = -abs(margins[-1])
    return _verdict(margins, tol)


def weakly_majorizes(y, x, tol: float = DEFAULT_TOL) -> MajorizationVerdict:
    """Test x ≺_w y: every top-k sum of x is at most that of y."""
    y, x = _pair(y, x)
    margins = np.cumsum(np.sort(y)[::-1]) - np.cumsum(np.sort(x)[::-1])
    return _verdict(margins, tol)


def supermajorizes(y, x, tol: float = DEFAULT_TOL) -> MajorizationVerdict:
    """Test x ≺^w y: every bottom-k sum of x is at least that of y."""
    y, x = _pair(y, x)
    margins = np.cumsum(np.sort(x)) - np.cumsum(np.sort(y))
    return _verdict(margins, tol)


def logmaj_implies_weakmaj_check(x, y, tol: float = DEFAULT_TOL) -> bool:
    """Self-test of the predicates: whenever x ≺_log y holds, x ≺_w y must
    hold as well (Weyl/Polya). Returns True when the implication is
    satisfied, vacuously or not."""
    if not log_majorizes(y, x, tol).holds:
        return True
    return weakly_majorizes(y, x, tol).holds
