"""Bicomplex matrices and vectors with componentwise algebra.

A bicomplex matrix is a pair (m1, m2) of equally shaped complex matrices,
the coefficients of e and e†.  Products, determinants, inverses, adjoints
and inner products all act componentwise; the direct row-times-column
bicomplex product agrees with this and is kept as a test oracle only.

``ComplexMatrix`` is a small dense matrix over either scalar backend
(GaussianRational or complex).  Exact elimination (Bareiss determinants,
Gauss-Jordan inverses, reduced row echelon, kernels) only runs on the
exact backend; the float backend uses partially pivoted LU.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

from .errors import (
    BackendMismatch,
    NotSelfAdjoint,
    NotSquare,
    ShapeMismatch,
    SingularComponent,
)
from .scalars import (
    EXACT,
    FLOAT,
    BicomplexScalar,
    GaussianRational,
    HyperbolicValue,
    _component_backend,
    coerce_component,
    infer_backend,
)

#: relative threshold for "det == 0" decisions on the float backend
DET_ZERO_TOL = 1e-10


class ComplexMatrix:
    """Dense complex matrix over one scalar backend, stored row-major."""

    __slots__ = ("rows", "cols", "data", "backend")

    def __init__(self, data: Sequence[Sequence], backend: str | None = None):
        data = [list(row) for row in data]
        if not data or not data[0]:
            raise ShapeMismatch("matrix must have at least one row and column")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ShapeMismatch("ragged rows")
        if backend is None:
            backend = infer_backend(data[0][0])
        data = [[coerce_component(x, backend) for x in row] for row in data]
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", tuple(tuple(row) for row in data))
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, *a):
        raise AttributeError("ComplexMatrix is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, n: int, backend: str = EXACT) -> "ComplexMatrix":
        one = _one(backend)
        zero = _zero(backend)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], backend)

    @classmethod
    def zeros(cls, rows: int, cols: int, backend: str = EXACT) -> "ComplexMatrix":
        zero = _zero(backend)
        return cls([[zero] * cols for _ in range(rows)], backend)

    @classmethod
    def diagonal(cls, entries: Sequence, backend: str = EXACT) -> "ComplexMatrix":
        n = len(entries)
        zero = _zero(backend)
        return cls(
            [[coerce_component(entries[i], backend) if i == j else zero for j in range(n)] for i in range(n)],
            backend,
        )

    # -- shape helpers --------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i) -> list:
        return list(self.data[i])

    def col(self, j) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    # -- algebra ---------------------------------------------------------------
    def _check(self, other: "ComplexMatrix", same_shape=True):
        if self.backend != other.backend:
            raise BackendMismatch("mixed exact/float matrices")
        if same_shape and self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check(other)
        return ComplexMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            self.backend,
        )

    def __sub__(self, other):
        self._check(other)
        return ComplexMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            self.backend,
        )

    def __neg__(self):
        return ComplexMatrix([[-a for a in row] for row in self.data], self.backend)

    def scale(self, s) -> "ComplexMatrix":
        s = coerce_component(s, self.backend)
        return ComplexMatrix([[s * a for a in row] for row in self.data], self.backend)

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise ShapeMismatch(f"inner dimensions differ: {self.shape} x {other.shape}")
        zero = _zero(self.backend)
        bt = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            ra = self.data[i]
            out.append([_dot(ra, bc, zero) for bc in bt])
        return ComplexMatrix(out, self.backend)

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector (plain component list)."""
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector length {len(vec)} vs {self.cols} columns")
        zero = _zero(self.backend)
        return [_dot(row, vec, zero) for row in self.data]

    def transpose(self) -> "ComplexMatrix":
        return ComplexMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.backend,
        )

    def conj(self) -> "ComplexMatrix":
        return ComplexMatrix(
            [[a.conjugate() for a in row] for row in self.data], self.backend
        )

    def conj_transpose(self) -> "ComplexMatrix":
        return self.conj().transpose()

    def trace(self):
        if not self.is_square():
            raise NotSquare("trace needs a square matrix")
        t = _zero(self.backend)
        for i in range(self.rows):
            t = t + self.data[i][i]
        return t

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return (
            self.backend == other.backend
            and self.shape == other.shape
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.backend, self.data))

    def approx_eq(self, other: "ComplexMatrix", tol: float = 1e-12) -> bool:
        self._check(other)
        scale = max(self.frobenius(), other.frobenius(), 1.0)
        diff = self - other
        return diff.frobenius() <= tol * scale

    def frobenius(self) -> float:
        return math.sqrt(sum(abs(complex(a)) ** 2 for row in self.data for a in row))

    def to_float(self) -> "ComplexMatrix":
        return ComplexMatrix(
            [[complex(a) for a in row] for row in self.data], FLOAT
        )

    def to_numpy(self):
        import numpy as np

        return np.array(
            [[complex(a) for a in row] for row in self.data], dtype=np.complex128
        )

    @classmethod
    def from_numpy(cls, arr) -> "ComplexMatrix":
        return cls([[complex(x) for x in row] for row in arr], FLOAT)

    def __repr__(self):
        return f"ComplexMatrix({self.rows}x{self.cols}, {self.backend})"


def _zero(backend):
    return GaussianRational(0) if backend == EXACT else 0j


def _one(backend):
    return GaussianRational(1) if backend == EXACT else complex(1)


def _dot(row, col, zero):
    s = zero
    for a, b in zip(row, col):
        s = s + a * b
    return s


# ---------------------------------------------------------------------------
# exact elimination
# ---------------------------------------------------------------------------

def bareiss_determinant(m: ComplexMatrix):
    """Exact determinant by Bareiss fraction-free elimination."""
    if not m.is_square():
        raise NotSquare("determinant needs a square matrix")
    if m.backend != EXACT:
        raise BackendMismatch("bareiss_determinant is exact-only")
    n = m.rows
    a = [list(row) for row in m.data]
    sign = 1
    prev = GaussianRational(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return GaussianRational(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = GaussianRational(0)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def lu_determinant(m: ComplexMatrix) -> complex:
    """Float determinant by LU with partial pivoting."""
    if not m.is_square():
        raise NotSquare("determinant needs a square matrix")
    n = m.rows
    a = [[complex(x) for x in row] for row in m.data]
    det = complex(1)
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[piv][k] == 0:
            return 0j
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return det


def exact_rref(rows: List[List[GaussianRational]]):
    """Reduced row echelon form over the Gaussian rationals.

    Returns (rref_rows, pivot_columns).  Pivot columns are chosen
    leftmost-first, which makes the output canonical.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if not m[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = GaussianRational(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def exact_rank(m: ComplexMatrix) -> int:
    rref, pivots = exact_rref([list(row) for row in m.data])
    return len(pivots)


def exact_kernel(m: ComplexMatrix) -> List[List[GaussianRational]]:
    """Basis of the right null space of an exact matrix (column vectors
    as plain lists), derived from the RREF free columns."""
    if m.backend != EXACT:
        raise BackendMismatch("exact_kernel is exact-only")
    rref, pivots = exact_rref([list(row) for row in m.data])
    n = m.cols
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [GaussianRational(0)] * n
        v[fc] = GaussianRational(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


class RowSpan:
    """Incremental exact row space with membership tests (echelon state)."""

    def __init__(self, n: int):
        self.n = n
        self.rows: List[List[GaussianRational]] = []
        self.pivots: List[int] = []

    def _reduce(self, v: Sequence[GaussianRational]) -> List[GaussianRational]:
        v = list(v)
        for row, piv in zip(self.rows, self.pivots):
            if not v[piv].is_zero():
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, v: Sequence[GaussianRational]) -> bool:
        return all(c.is_zero() for c in self._reduce(v))

    def add(self, v: Sequence[GaussianRational]) -> bool:
        """Add v to the span; returns True if it enlarged the space."""
        r = self._reduce(v)
        piv = next((i for i, c in enumerate(r) if not c.is_zero()), None)
        if piv is None:
            return False
        inv = GaussianRational(1) / r[piv]
        self.rows.append([c * inv for c in r])
        self.pivots.append(piv)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def exact_inverse(m: ComplexMatrix) -> ComplexMatrix:
    """Gauss-Jordan inverse over the Gaussian rationals.

    Raises ValueError on singular input; bicomplex-level code maps this
    to SingularComponent.
    """
    if not m.is_square():
        raise NotSquare("inverse needs a square matrix")
    n = m.rows
    aug = [list(m.data[i]) + ComplexMatrix.identity(n, EXACT).row(i) for i in range(n)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not aug[i][c].is_zero():
                piv = i
                break
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = GaussianRational(1) / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return ComplexMatrix([row[n:] for row in aug], EXACT)


def float_inverse(m: ComplexMatrix) -> ComplexMatrix:
    if not m.is_square():
        raise NotSquare("inverse needs a square matrix")
    n = m.rows
    aug = [[complex(x) for x in m.data[i]] + [1 + 0j if j == i else 0j for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = max(range(c, n), key=lambda i: abs(aug[i][c]))
        if aug[piv][c] == 0:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                g = aug[i][c]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[c])]
    return ComplexMatrix([row[n:] for row in aug], FLOAT)


def component_determinant(m: ComplexMatrix):
    return bareiss_determinant(m) if m.backend == EXACT else lu_determinant(m)


def component_det_is_zero(m: ComplexMatrix, tol: float = DET_ZERO_TOL) -> bool:
    """Decide det == 0.  Exact: structural.  Float: tolerance scaled by the
    matrix norm (a determinant scales like norm^n)."""
    d = component_determinant(m)
    if m.backend == EXACT:
        return d.is_zero()
    scale = max(1.0, m.frobenius()) ** m.rows
    return abs(d) <= tol * scale


# ---------------------------------------------------------------------------
# bicomplex matrices
# ---------------------------------------------------------------------------

class BicomplexMatrix:
    """Pair (m1, m2) of identically shaped complex matrices."""

    __slots__ = ("m1", "m2")

    def __init__(self, m1: ComplexMatrix, m2: ComplexMatrix):
        if m1.shape != m2.shape:
            raise ShapeMismatch(f"component shapes differ: {m1.shape} vs {m2.shape}")
        if m1.backend != m2.backend:
            raise BackendMismatch("components on different backends")
        object.__setattr__(self, "m1", m1)
        object.__setattr__(self, "m2", m2)

    def __setattr__(self, *a):
        raise AttributeError("BicomplexMatrix is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_scalar_entries(cls, entries: Sequence[Sequence[BicomplexScalar]]) -> "BicomplexMatrix":
        backend = entries[0][0].backend
        m1 = ComplexMatrix([[s.c1 for s in row] for row in entries], backend)
        m2 = ComplexMatrix([[s.c2 for s in row] for row in entries], backend)
        return cls(m1, m2)

    @classmethod
    def identity(cls, n: int, backend: str = EXACT) -> "BicomplexMatrix":
        i = ComplexMatrix.identity(n, backend)
        return cls(i, i)

    @classmethod
    def zeros(cls, rows: int, cols: int, backend: str = EXACT) -> "BicomplexMatrix":
        z = ComplexMatrix.zeros(rows, cols, backend)
        return cls(z, z)

    @classmethod
    def diagonal(cls, scalars: Sequence[BicomplexScalar]) -> "BicomplexMatrix":
        backend = scalars[0].backend
        return cls(
            ComplexMatrix.diagonal([s.c1 for s in scalars], backend),
            ComplexMatrix.diagonal([s.c2 for s in scalars], backend),
        )

    # -- views ----------------------------------------------------------------
    @property
    def backend(self) -> str:
        return self.m1.backend

    @property
    def rows(self) -> int:
        return self.m1.rows

    @property
    def cols(self) -> int:
        return self.m1.cols

    @property
    def shape(self):
        return self.m1.shape

    def is_square(self) -> bool:
        return self.m1.is_square()

    def entry(self, i: int, j: int) -> BicomplexScalar:
        return BicomplexScalar(self.m1[i, j], self.m2[i, j])

    def scalar_entries(self) -> List[List[BicomplexScalar]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def to_float(self) -> "BicomplexMatrix":
        return BicomplexMatrix(self.m1.to_float(), self.m2.to_float())

    # -- componentwise algebra ---------------------------------------------------
    def __add__(self, other: "BicomplexMatrix") -> "BicomplexMatrix":
        return BicomplexMatrix(self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other: "BicomplexMatrix") -> "BicomplexMatrix":
        return BicomplexMatrix(self.m1 - other.m1, self.m2 - other.m2)

    def __neg__(self):
        return BicomplexMatrix(-self.m1, -self.m2)

    def __matmul__(self, other: "BicomplexMatrix") -> "BicomplexMatrix":
        return BicomplexMatrix(self.m1 @ other.m1, self.m2 @ other.m2)

    def scale(self, s: BicomplexScalar) -> "BicomplexMatrix":
        return BicomplexMatrix(self.m1.scale(s.c1), self.m2.scale(s.c2))

    def __eq__(self, other):
        if not isinstance(other, BicomplexMatrix):
            return NotImplemented
        return self.m1 == other.m1 and self.m2 == other.m2

    def __hash__(self):
        return hash((self.m1, self.m2))

    def approx_eq(self, other: "BicomplexMatrix", tol: float = 1e-12) -> bool:
        return self.m1.approx_eq(other.m1, tol) and self.m2.approx_eq(other.m2, tol)

    def __repr__(self):
        return f"BicomplexMatrix({self.rows}x{self.cols}, {self.backend})"


class BicomplexVector:
    """Column vector with idempotent components v1, v2 of equal length."""

    __slots__ = ("v1", "v2")

    def __init__(self, v1: Sequence, v2: Sequence, backend: str | None = None):
        v1 = list(v1)
        v2 = list(v2)
        if len(v1) != len(v2):
            raise ShapeMismatch("component lengths differ")
        if not v1:
            raise ShapeMismatch("empty vector")
        if backend is None:
            backend = infer_backend(v1[0])
        object.__setattr__(self, "v1", tuple(coerce_component(x, backend) for x in v1))
        object.__setattr__(self, "v2", tuple(coerce_component(x, backend) for x in v2))

    def __setattr__(self, *a):
        raise AttributeError("BicomplexVector is immutable")

    @classmethod
    def from_scalars(cls, scalars: Sequence[BicomplexScalar]) -> "BicomplexVector":
        return cls([s.c1 for s in scalars], [s.c2 for s in scalars])

    @classmethod
    def basis(cls, n: int, k: int, backend: str = EXACT) -> "BicomplexVector":
        one = _one(backend)
        zero = _zero(backend)
        col = [one if i == k else zero for i in range(n)]
        return cls(col, col, backend)

    @classmethod
    def zeros(cls, n: int, backend: str = EXACT) -> "BicomplexVector":
        zero = _zero(backend)
        return cls([zero] * n, [zero] * n, backend)

    @property
    def backend(self) -> str:
        return _component_backend(self.v1[0])

    def __len__(self):
        return len(self.v1)

    def entry(self, i: int) -> BicomplexScalar:
        return BicomplexScalar(self.v1[i], self.v2[i])

    def scalars(self) -> List[BicomplexScalar]:
        return [self.entry(i) for i in range(len(self))]

    def __add__(self, other: "BicomplexVector") -> "BicomplexVector":
        return BicomplexVector(
            [a + b for a, b in zip(self.v1, other.v1)],
            [a + b for a, b in zip(self.v2, other.v2)],
        )

    def __sub__(self, other: "BicomplexVector") -> "BicomplexVector":
        return BicomplexVector(
            [a - b for a, b in zip(self.v1, other.v1)],
            [a - b for a, b in zip(self.v2, other.v2)],
        )

    def scale(self, s: BicomplexScalar) -> "BicomplexVector":
        return BicomplexVector(
            [s.c1 * a for a in self.v1], [s.c2 * a for a in self.v2]
        )

    def __eq__(self, other):
        if not isinstance(other, BicomplexVector):
            return NotImplemented
        return self.v1 == other.v1 and self.v2 == other.v2

    def __hash__(self):
        return hash((self.v1, self.v2))

    def as_column(self) -> BicomplexMatrix:
        backend = self.backend
        return BicomplexMatrix(
            ComplexMatrix([[x] for x in self.v1], backend),
            ComplexMatrix([[x] for x in self.v2], backend),
        )

    def __repr__(self):
        return f"BicomplexVector(len={len(self)}, {self.backend})"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def mat_mul(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    """Componentwise product (a.m1 b.m1, a.m2 b.m2)."""
    return a @ b


def mat_vec(a: BicomplexMatrix, v: BicomplexVector) -> BicomplexVector:
    return BicomplexVector(a.m1.apply(list(v.v1)), a.m2.apply(list(v.v2)))


def determinant(a: BicomplexMatrix) -> BicomplexScalar:
    """det A = det(m1) e + det(m2) e†."""
    if not a.is_square():
        raise NotSquare("determinant needs a square matrix")
    return BicomplexScalar(component_determinant(a.m1), component_determinant(a.m2))


def inverse(a: BicomplexMatrix, det_tol: float = DET_ZERO_TOL) -> BicomplexMatrix:
    """Componentwise inverse; exists exactly when both component
    determinants are nonzero."""
    if not a.is_square():
        raise NotSquare("inverse needs a square matrix")
    s1 = component_det_is_zero(a.m1, det_tol)
    s2 = component_det_is_zero(a.m2, det_tol)
    if s1 and s2:
        raise SingularComponent("both")
    if s1:
        raise SingularComponent(1)
    if s2:
        raise SingularComponent(2)
    inv = exact_inverse if a.backend == EXACT else float_inverse
    return BicomplexMatrix(inv(a.m1), inv(a.m2))


def adjoint(a: BicomplexMatrix) -> BicomplexMatrix:
    """Entrywise bicomplex conjugate, then transpose (componentwise
    conjugate-transpose)."""
    return BicomplexMatrix(a.m1.conj_transpose(), a.m2.conj_transpose())


def is_self_adjoint(a: BicomplexMatrix, tol: float = 1e-10) -> bool:
    if not a.is_square():
        return False
    if a.backend == EXACT:
        return adjoint(a) == a
    return adjoint(a).approx_eq(a, tol)


def is_eigenvalue(a: BicomplexMatrix, lam: BicomplexScalar, det_tol: float = DET_ZERO_TOL) -> bool:
    """True iff det(A - lam*I) == 0 as a bicomplex scalar (both components).

    Equivalent to lam.c1 in spec(m1) and lam.c2 in spec(m2): eigenvectors
    follow the both-components-nonzero convention.
    """
    if not a.is_square():
        raise NotSquare("eigenvalue test needs a square matrix")
    shifted = a - BicomplexMatrix.identity(a.rows, a.backend).scale(lam)
    return component_det_is_zero(shifted.m1, det_tol) and component_det_is_zero(
        shifted.m2, det_tol
    )


def eigenvalues(a: BicomplexMatrix, det_tol: float = DET_ZERO_TOL) -> set:
    """All pairings lam1 e + lam2 e† of component eigenvalues.

    Up to n*n members when the component spectra are distinct; the
    non-uniqueness of pairings is deliberate (it is what drives the n!
    distinct diagonalizations of self-adjoint matrices).

    Exact backend: component spectra via the exact characteristic
    polynomial (raises DoesNotSplit past the Gaussian rationals).  Float
    backend: self-adjoint matrices only, via the Jacobi eigensolver.
    """
    if not a.is_square():
        raise NotSquare("eigenvalues need a square matrix")
    if a.backend == EXACT:
        from .jordan import char_poly, split_eigenvalues

        spec1 = [r for r, _ in split_eigenvalues(char_poly(a.m1))]
        spec2 = [r for r, _ in split_eigenvalues(char_poly(a.m2))]
        return {BicomplexScalar(l1, l2) for l1 in spec1 for l2 in spec2}
    if not is_self_adjoint(a):
        raise NotSelfAdjoint(
            "float-backend eigenvalues are only available for self-adjoint "
            "matrices; use the exact backend for general spectra"
        )
    from .spectral import hermitian_eigen

    spec1 = hermitian_eigen(a.m1).values
    spec2 = hermitian_eigen(a.m2).values
    return {
        BicomplexScalar(complex(l1), complex(l2)) for l1 in spec1 for l2 in spec2
    }


def inner_product(x: BicomplexVector, y: BicomplexVector) -> BicomplexScalar:
    """<x, y> = sum_i x_i * conj(y_i), computed per idempotent component."""
    if len(x) != len(y):
        raise ShapeMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")
    zero = _zero(x.backend)
    c1 = zero
    c2 = zero
    for a, b in zip(x.v1, y.v1):
        c1 = c1 + a * b.conjugate()
    for a, b in zip(x.v2, y.v2):
        c2 = c2 + a * b.conjugate()
    return BicomplexScalar(c1, c2)


def vector_hyperbolic_norm(x: BicomplexVector) -> HyperbolicValue:
    """Componentwise Euclidean norm (squared rationals on the exact
    backend, real moduli on the float backend)."""
    if x.backend == EXACT:
        s1 = sum((a.abs2() for a in x.v1), Fraction(0))
        s2 = sum((a.abs2() for a in x.v2), Fraction(0))
        return HyperbolicValue(s1, s2, squared=True)
    s1 = math.sqrt(sum(abs(a) ** 2 for a in x.v1))
    s2 = math.sqrt(sum(abs(a) ** 2 for a in x.v2))
    return HyperbolicValue(s1, s2, squared=False)
