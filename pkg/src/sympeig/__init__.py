"""Symplectic spectral theory of real positive definite matrices.

Williamson normal forms and symplectic eigenbases, Euler decompositions of
symplectic matrices, Riemannian geometry of the positive definite cone, and a
seeded verification suite for the inequality theorems relating all of these.
"""

from .errors import DomainError, FormatError, InputError, NumericalError, SympeigError
from .majorization import (
    MajorizationVerdict,
    log_majorizes,
    logmaj_implies_weakmaj_check,
    supermajorizes,
    weakly_majorizes,
)
from .matfun import (
    NormTriple,
    SpectralDecomposition,
    matrix_abs,
    norms,
    polar,
    sym_eig,
    sym_exp,
    sym_log,
    sym_pow,
)
from .means import (
    KarcherResult,
    geodesic,
    geometric_mean,
    karcher_mean,
    karcher_residual,
    riemannian_distance,
)
from .sops import s_direct_sum, s_pinching, s_principal_submatrix
from .symplectic import (
    BlockDecomposition,
    EulerForm,
    SuperstochasticCheck,
    SymplecticCheck,
    associated_matrix,
    blocks,
    convention_permutation,
    euler_decompose,
    is_doubly_stochastic,
    is_doubly_superstochastic,
    is_symplectic,
    mtilde_identity_check,
    orthosymplectic_to_unitary,
    random_posdef,
    random_symplectic,
    standard_J,
    unitary_to_orthosymplectic,
)
from .theorems import (
    DEFAULT_TOLERANCES,
    THEOREM_IDS,
    SuiteConfig,
    TheoremReport,
    check_corollary8,
    check_interlacing,
    check_minmax,
    check_pinching,
    check_superadditivity,
    check_theorem1,
    check_theorem3,
    check_theorem4,
    check_theorem5,
    check_theorem6,
    check_theorem7,
    check_theorem11,
    run_suite,
    summarize,
)
from .williamson import (
    SymplecticEigenbasis,
    SymplecticSpectrum,
    WilliamsonForm,
    is_gaussian,
    sharp_spectrum,
    symplectic_eigenbasis,
    symplectic_spectrum,
    validate_posdef,
    williamson_form,
)

__version__ = "0.1.0"
