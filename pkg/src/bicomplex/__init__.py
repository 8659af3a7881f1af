"""Bicomplex linear algebra in the idempotent representation.

Scalars, matrices and operators over the bicomplex ring are stored as
pairs of complex idempotent components, on either an exact
Gaussian-rational backend or a floating backend.  Multiplication,
determinants, inverses, Jordan forms, invariant-subspace lattices,
self-adjoint diagonalizations and compact-operator demos all act
componentwise on those pairs.
"""

from ._kernels import KERNEL_BACKEND
from .errors import (
    BackendMismatch,
    BicomplexError,
    ConsistencyFailure,
    DegenerateSpectrum,
    DoesNotSplit,
    EigenvalueFieldError,
    EmptySet,
    NoConvergence,
    NotInvertible,
    NotSelfAdjoint,
    NotSquare,
    ShapeMismatch,
    SingularComponent,
    SubspaceIsFull,
    UnsupportedOnExactBackend,
)
from .scalars import (
    EXACT,
    FLOAT,
    BicomplexScalar,
    GaussianRational,
    HyperbolicValue,
    Ordering,
    ball_contains,
    conjugate,
    hyperbolic_inf,
    hyperbolic_norm,
    invert,
    nth_root,
)
from .matrices import (
    BicomplexMatrix,
    BicomplexVector,
    ComplexMatrix,
    adjoint,
    determinant,
    eigenvalues,
    inner_product,
    inverse,
    is_eigenvalue,
    is_self_adjoint,
    mat_mul,
    mat_vec,
    vector_hyperbolic_norm,
)
from .jordan import (
    BicomplexJordanData,
    ComplexJordanData,
    Poly,
    bicomplex_jordan,
    char_poly,
    complex_jordan,
    enumerate_pairings,
    split_eigenvalues,
)
from .lattice import (
    BicomplexSubspace,
    Lattice,
    Subspace,
    bicomplex_lattice,
    component_lattice,
    is_invariant,
    product_lattice,
    to_dot,
    verify_lattice,
)
from .spectral import (
    BicomplexSpectralData,
    HermitianEigenData,
    enumerate_diagonalizations,
    hermitian_eigen,
    selfadjoint_diagonalize,
)
from .operators import (
    BicomplexHilbertSpace,
    FiniteRankOperator,
    OperatorSpectrum,
    apply,
    check_compact_spectral_properties,
    diagonal_tower_operator,
    hyperbolic_operator_norm,
    norm_limit_demo,
    power_sigmas,
    riesz_residuals,
    riesz_witness,
    spectrum,
)

__version__ = "0.1.0"
