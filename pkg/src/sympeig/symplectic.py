"""Symplectic-group utilities.

Covers the standard form J, symplecticity testing, the block decomposition of
a symplectic matrix and its associated nonnegative matrix, doubly
(super)stochastic checks, the Euler decomposition into orthogonal-symplectic
factors and a squeezing diagonal, the correspondence between
orthogonal-symplectic matrices and complex unitaries, and seeded random
generators used by the property suites.

Block convention throughout: J = [[0, I], [-I, 0]]. Data in the interleaved
convention (J_2 + ... + J_2 on the diagonal) can be mapped to this one with
:func:`convention_permutation`.
"""

import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import InputError, NumericalError
from .matfun import require_square

# Symplecticity defect ||M^T J M - J||_F is compared to tol * (1 + ||M||_F^2).
SYMPLECTIC_TOL = 1e-9
# Eigenvalues gamma of the squeezing factor within this distance of 1 are
# treated as a single unit block in the Euler decomposition.
_UNIT_CLUSTER_TOL = 1e-10


def standard_J(n: int) -> np.ndarray:
    """The 2n x 2n standard symplectic form [[0, I], [-I, 0]]."""
    if n < 1:
        raise InputError(f"half-order must be >= 1, got {n}")
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    return J


def convention_permutation(n: int) -> np.ndarray:
    """Permutation matrix P mapping block-convention coordinates to the
    interleaved (q1, p1, ..., qn, pn) convention.

    P^T (J_2 + ... + J_2) P equals ``standard_J(n)``, and ``P.T @ A @ P``
    converts a matrix given in the interleaved convention to the block
    convention used everywhere else in this package.
    """
    if n < 1:
        raise InputError(f"half-order must be >= 1, got {n}")
    P = np.zeros((2 * n, 2 * n))
    for k in range(n):
        P[2 * k, k] = 1.0
        P[2 * k + 1, n + k] = 1.0
    return P


@dataclass(frozen=True)
class SymplecticCheck:
    """Outcome of a symplecticity test; truthiness follows ``ok``."""

    ok: bool
    residual: float

    def __bool__(self) -> bool:
        return self.ok


def is_symplectic(M: np.ndarray, tol: float = SYMPLECTIC_TOL) -> SymplecticCheck:
    """Test M^T J M = J, reporting the Frobenius residual.

    The matrix passes when ``||M^T J M - J||_F <= tol * (1 + ||M||_F^2)``.

    Raises
    ------
    InputError
        If M is not square of even order.
    """
    M = require_square(M, "symplectic candidate")
    if M.shape[0] % 2 != 0:
        raise InputError(f"symplectic matrices have even order, got {M.shape[0]}")
    J = standard_J(M.shape[0] // 2)
    residual = float(np.linalg.norm(M.T @ J @ M - J))
    scale = 1.0 + float(np.sum(M * M))
    return SymplecticCheck(ok=residual <= tol * scale, residual=residual)


def validate_symplectic(M: np.ndarray, tol: float = SYMPLECTIC_TOL) -> np.ndarray:
    """Return M as an array, raising InputError if it fails ``is_symplectic``."""
    M = require_square(M, "symplectic candidate")
    check = is_symplectic(M, tol)
    if not check.ok:
        raise InputError(f"matrix is not symplectic: residual {check.residual:.3e} exceeds tolerance")
    return M


@dataclass(frozen=True)
class BlockDecomposition:
    """The four n x n blocks [[a, b], [c, g]] of a symplectic matrix, plus the
    Frobenius residuals of the three structural identities
    a g^T - b c^T = I, a b^T - b a^T = 0, c g^T - g c^T = 0."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    g: np.ndarray
    residuals: tuple[float, float, float]


def blocks(M: np.ndarray, tol: float = SYMPLECTIC_TOL) -> BlockDecomposition:
    """Split a symplectic matrix into its four blocks in reading order."""
    M = validate_symplectic(M, tol)
    n = M.shape[0] // 2
    a, b = M[:n, :n], M[:n, n:]
    c, g = M[n:, :n], M[n:, n:]
    residuals = (
        float(np.linalg.norm(a @ g.T - b @ c.T - np.eye(n))),
        float(np.linalg.norm(a @ b.T - b @ a.T)),
        float(np.linalg.norm(c @ g.T - g @ c.T)),
    )
    return BlockDecomposition(a=a, b=b, c=c, g=g, residuals=residuals)


def associated_matrix(M: np.ndarray, tol: float = SYMPLECTIC_TOL) -> np.ndarray:
    """The nonnegative n x n matrix with entries (a_ij^2 + b_ij^2 + c_ij^2 +
    g_ij^2) / 2 built from the blocks of a symplectic M.

    Every row and column sum is >= 1; the matrix is doubly stochastic exactly
    when M is orthogonal.
    """
    dec = blocks(M, tol)
    return 0.5 * (dec.a**2 + dec.b**2 + dec.c**2 + dec.g**2)


def is_doubly_stochastic(B: np.ndarray, tol: float = 1e-8) -> bool:
    """True when all entries are >= -tol and every row and column sums to 1
    within tol."""
    B = require_square(B, "doubly stochastic candidate")
    if np.min(B) < -tol:
        return False
    return bool(
        np.max(np.abs(B.sum(axis=1) - 1.0)) <= tol and np.max(np.abs(B.sum(axis=0) - 1.0)) <= tol
    )


@dataclass(frozen=True)
class SuperstochasticCheck:
    """Outcome of the transportation-feasibility test.

    ``witness`` is a doubly stochastic matrix dominated entrywise by the
    input (up to the tolerance) when ``ok``, else None. ``flow_value`` is
    the attained maximum flow (equals n exactly when feasible).
    """

    ok: bool
    flow_value: float
    witness: np.ndarray | None

    def __bool__(self) -> bool:
        return self.ok


def is_doubly_superstochastic(B: np.ndarray, tol: float = 1e-9) -> SuperstochasticCheck:
    """Decide whether B dominates some doubly stochastic matrix entrywise.

    Solved as a bipartite transportation feasibility problem: a source feeds
    each row with capacity 1, row i connects to column j with capacity
    b_ij + tol, and each column drains into a sink with capacity 1. B is
    doubly superstochastic iff the maximum flow equals n; the witness is read
    off the flow, so it satisfies p_ij <= b_ij + tol by construction.
    """
    B = require_square(B, "doubly superstochastic candidate")
    if np.min(B) < -tol:
        return SuperstochasticCheck(ok=False, flow_value=0.0, witness=None)
    n = B.shape[0]
    graph = nx.DiGraph()
    for i in range(n):
        graph.add_edge("s", ("r", i), capacity=1.0)
        graph.add_edge(("c", i), "t", capacity=1.0)
    for i in range(n):
        for j in range(n):
            cap = B[i, j] + tol
            if cap > 0.0:
                graph.add_edge(("r", i), ("c", j), capacity=cap)
    flow_value, flow = nx.maximum_flow(graph, "s", "t")
    ok = flow_value >= n - 1e-9 * max(1, n)
    witness = None
    if ok:
        witness = np.zeros((n, n))
        for i in range(n):
            for node, amount in flow[("r", i)].items():
                witness[i, node[1]] = amount
    return SuperstochasticCheck(ok=bool(ok), flow_value=float(flow_value), witness=witness)


@dataclass(frozen=True)
class EulerForm:
    """Factorization M = o1 @ diag(gamma, 1/gamma) @ o2.T with o1, o2
    orthogonal-symplectic and gamma descending with gamma_n >= 1."""

    o1: np.ndarray
    gamma: np.ndarray
    o2: np.ndarray

    def middle(self) -> np.ndarray:
        """The diagonal factor diag(gamma_1..gamma_n, 1/gamma_1..1/gamma_n)."""
        return np.diag(np.concatenate([self.gamma, 1.0 / self.gamma]))

    def reconstruct(self) -> np.ndarray:
        return self.o1 @ self.middle() @ self.o2.T


def _symplectic_gram_schmidt(W: np.ndarray, J: np.ndarray) -> list[tuple[np.ndarray, np.ndarray]]:
    """Extract (u, -Ju) pairs spanning the J-invariant column space of W."""
    want = W.shape[1] // 2
    pairs: list[tuple[np.ndarray, np.ndarray]] = []
    basis: list[np.ndarray] = []
    for i in range(W.shape[1]):
        if len(pairs) == want:
            break
        w = W[:, i].copy()
        for _ in range(2):  # re-orthogonalize for stability
            for b in basis:
                w -= (b @ w) * b
        nrm = np.linalg.norm(w)
        if nrm < 1e-6:
            continue
        u = w / nrm
        v = -(J @ u)
        pairs.append((u, v))
        basis.extend((u, v))
    if len(pairs) != want:
        raise NumericalError("failed to build a symplectic basis of the unit eigenvalue block")
    return pairs


def euler_decompose(M: np.ndarray, tol: float = SYMPLECTIC_TOL) -> EulerForm:
    """Euler (Bloch-Messiah) decomposition of a symplectic matrix.

    Returns orthogonal-symplectic o1, o2 and gamma_1 >= ... >= gamma_n >= 1
    with ``M = o1 @ diag(gamma, 1/gamma) @ o2.T``.

    The positive factor of the polar decomposition of M is a symplectic
    positive definite matrix whose eigenvalues come in (gamma^2, gamma^-2)
    pairs; its eigenvectors for eigenvalues above 1 give the first half of
    o2 directly and J maps them onto the second half. Eigenvalues within
    roundoff of 1 are handled as one block with a symplectic Gram-Schmidt
    pass, which keeps the construction stable for (nearly) orthogonal input.

    Raises
    ------
    InputError
        If M is not symplectic within tol.
    NumericalError
        If the eigenvalues of M^T M fail to match up in reciprocal pairs.
    """
    M = validate_symplectic(M, tol)
    n = M.shape[0] // 2
    J = standard_J(n)
    G = M.T @ M
    G = (G + G.T) / 2.0
    lam, X = np.linalg.eigh(G)
    if lam[0] <= 0:
        raise NumericalError(f"M^T M has non-positive eigenvalue {lam[0]:.3e}")

    gam = np.sqrt(lam)
    pair_dev = np.max(np.abs(lam * lam[::-1] - 1.0))
    if pair_dev > 1e-8 * gam[-1] ** 2:
        raise NumericalError(
            f"eigenvalues of M^T M do not pair into (g, 1/g): deviation {pair_dev:.3e}"
        )

    unit_tol = _UNIT_CLUSTER_TOL * max(1.0, gam[-1])
    in_unit = np.abs(gam - 1.0) <= unit_tol

    entries: list[tuple[float, np.ndarray, np.ndarray]] = []
    for idx in np.argsort(-gam):
        if gam[idx] <= 1.0 + unit_tol:
            continue
        u = X[:, idx]
        entries.append((float(gam[idx]), u, -(J @ u)))
    if np.any(in_unit):
        W = X[:, in_unit]
        if W.shape[1] % 2 != 0:
            raise NumericalError("unit eigenvalue block of M^T M has odd dimension")
        for u, v in _symplectic_gram_schmidt(W, J):
            q = math.sqrt(float(u @ (G @ u)))
            entries.append((max(q, 1.0 / q), u, v))
    if len(entries) != n:
        raise NumericalError(f"expected {n} squeezing values, found {len(entries)}")

    entries.sort(key=lambda e: -e[0])
    gamma = np.array([e[0] for e in entries])
    o2 = np.column_stack([e[1] for e in entries] + [e[2] for e in entries])
    scale = np.concatenate([1.0 / gamma, gamma])
    o1 = M @ (o2 * scale)  # M @ o2 @ middle^{-1}
    return EulerForm(o1=o1, gamma=gamma, o2=o2)


def orthosymplectic_to_unitary(O: np.ndarray, tol: float = SYMPLECTIC_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Real and imaginary parts (X, Y) of the unitary U = X + iY corresponding
    to an orthogonal-symplectic O = [[X, -Y], [Y, X]].

    No global phase is fixed; in particular the standard form J maps to
    (0, -I), i.e. U = -iI, under this block convention.

    Raises
    ------
    InputError
        If O is not orthogonal-symplectic of the required block form within tol.
    """
    O = require_square(O, "orthogonal-symplectic matrix")
    if O.shape[0] % 2 != 0:
        raise InputError(f"orthogonal-symplectic matrices have even order, got {O.shape[0]}")
    n = O.shape[0] // 2
    scale = 1.0 + float(np.sum(O * O))
    orth = np.linalg.norm(O.T @ O - np.eye(2 * n))
    if orth > tol * scale:
        raise InputError(f"matrix is not orthogonal: ||O^T O - I||_F = {orth:.3e}")
    validate_symplectic(O, tol)
    X, Y = O[:n, :n], O[n:, :n]
    block_dev = max(
        float(np.max(np.abs(O[:n, n:] + Y))),
        float(np.max(np.abs(O[n:, n:] - X))),
    )
    if block_dev > tol * max(1.0, float(np.max(np.abs(O)))):
        raise InputError(f"matrix lacks the [[X, -Y], [Y, X]] block structure: deviation {block_dev:.3e}")
    return X, Y


def unitary_to_orthosymplectic(X: np.ndarray, Y: np.ndarray, tol: float = SYMPLECTIC_TOL) -> np.ndarray:
    """Inverse of :func:`orthosymplectic_to_unitary`: assemble
    [[X, -Y], [Y, X]] from the parts of a unitary X + iY."""
    X = require_square(X, "unitary real part")
    Y = require_square(Y, "unitary imaginary part")
    if X.shape != Y.shape:
        raise InputError("real and imaginary parts must have matching shape")
    U = X + 1j * Y
    dev = np.linalg.norm(U.conj().T @ U - np.eye(X.shape[0]))
    if dev > tol * (1.0 + float(np.sum(np.abs(U) ** 2))):
        raise InputError(f"X + iY is not unitary: ||U*U - I||_F = {dev:.3e}")
    return np.block([[X, -Y], [Y, X]])


def mtilde_identity_check(M: np.ndarray, tol: float = SYMPLECTIC_TOL) -> float:
    """Maximum entrywise deviation between the associated matrix of M and its
    closed form in terms of the Euler factors.

    With U, V the unitaries of o1, o2 and s = (gamma + 1/gamma)/2,
    d = (gamma - 1/gamma)/2, each entry of the associated matrix equals
    |(U diag(d) V^T)_ij|^2 + |(U diag(s) V^*)_ij|^2. Serves as an internal
    consistency test tying together the Euler decomposition, the unitary
    correspondence and the associated matrix.
    """
    form = euler_decompose(M, tol)
    x1, y1 = orthosymplectic_to_unitary(form.o1, tol)
    x2, y2 = orthosymplectic_to_unitary(form.o2, tol)
    U = x1 + 1j * y1
    V = x2 + 1j * y2
    half_sum = (form.gamma + 1.0 / form.gamma) / 2.0
    half_diff = (form.gamma - 1.0 / form.gamma) / 2.0
    t1 = (U * half_diff) @ V.T
    t2 = (U * half_sum) @ V.conj().T
    rhs = np.abs(t1) ** 2 + np.abs(t2) ** 2
    lhs = associated_matrix(M, tol)
    return float(np.max(np.abs(lhs - rhs)))


def _haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed n x n unitary via QR of a complex Gaussian matrix."""
    Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    Q, R = np.linalg.qr(Z)
    phases = np.diagonal(R).copy()
    phases /= np.abs(phases)
    return Q * phases


def random_orthosymplectic_rng(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random orthogonal-symplectic matrix drawn through the unitary
    correspondence, so both structures hold by construction."""
    U = _haar_unitary(rng, n)
    return np.block([[U.real, -U.imag], [U.imag, U.real]])


def random_symplectic_rng(rng: np.random.Generator, n: int, spread: float = 1.0) -> np.ndarray:
    """rng-driven body of :func:`random_symplectic`."""
    if not np.isfinite(spread) or spread < 0:
        raise InputError(f"spread must be finite and >= 0, got {spread}")
    o1 = random_orthosymplectic_rng(rng, n)
    o2 = random_orthosymplectic_rng(rng, n)
    gamma = np.sort(np.exp(rng.uniform(0.0, spread, size=n)))[::-1]
    return (o1 * np.concatenate([gamma, 1.0 / gamma])) @ o2.T


def random_symplectic(seed: int, n: int, spread: float = 1.0) -> np.ndarray:
    """Seeded random symplectic matrix O1 diag(gamma, 1/gamma) O2^T.

    O1, O2 are independent random orthogonal-symplectic matrices and
    log(gamma_j) is uniform on [0, spread]. spread = 0 yields an orthogonal
    symplectic matrix. Deterministic in ``seed``.
    """
    return random_symplectic_rng(np.random.default_rng(seed), n, spread)


def random_posdef_rng(
    rng: np.random.Generator,
    n: int,
    condition_spread: float = 1.0,
    spread: float = 1.0,
    d: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """rng-driven body of :func:`random_posdef`; ``d`` overrides the planted
    symplectic spectrum when given."""
    if not np.isfinite(condition_spread) or condition_spread < 0:
        raise InputError(f"condition_spread must be finite and >= 0, got {condition_spread}")
    S = random_symplectic_rng(rng, n, spread)
    if d is None:
        d = np.exp(rng.uniform(-condition_spread, condition_spread, size=n))
    d = np.sort(np.asarray(d, dtype=float))
    A = S.T @ np.diag(np.concatenate([d, d])) @ S
    return (A + A.T) / 2.0, d


def random_posdef(
    seed: int, n: int, condition_spread: float = 1.0, spread: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """Seeded random positive definite matrix with a planted symplectic
    spectrum.

    Returns ``(A, d)`` where A = S^T diag(d, d) S for a random symplectic S
    and log(d_j) uniform on [-condition_spread, condition_spread]. Symplectic
    congruence preserves the symplectic spectrum, so ``d`` (sorted ascending)
    is exactly the symplectic spectrum of A, which makes it a planted oracle
    for spectrum computations. Deterministic in ``seed``.
    """
    return random_posdef_rng(np.random.default_rng(seed), n, condition_spread, spread)
