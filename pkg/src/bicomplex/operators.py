"""Desk-scale bicomplex operator theory on finite-dimensional spaces.

Everything here is a finite-dimensional truncation: compactness statements
become checkable norm/spectrum properties, and the reports say exactly
which truncation they were computed on.  The package never claims to
decide compactness of an abstract operator.

The spectrum of a bicomplex operator needs care: lam*I - T is noninvertible
as soon as *either* idempotent component is singular, so sigma(T) is
infinite whenever the components have nonempty spectra.  It is therefore
represented by the two component spectra plus a membership predicate; the
point spectrum (all pairings of component eigenvalues, which carry
both-components-nonzero eigenvectors) is materialized.

Closed-range statements (for I - K with K compact and I - K injective)
degenerate at finite dimension: every subspace of C^n is closed, and the
exact ``Subspace`` representation used by ``operator_range`` *is* a
finite-dimensional subspace by construction.  The test suite records this
as the degenerate verification it is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import NotSquare, ShapeMismatch, SubspaceIsFull
from .matrices import (
    BicomplexMatrix,
    BicomplexVector,
    ComplexMatrix,
    inner_product,
    mat_vec,
)
from .scalars import (
    EXACT,
    FLOAT,
    BicomplexScalar,
    GaussianRational,
    HyperbolicValue,
)
from .spectral import hermitian_eigen, spectral_norm

ORTHOGONALITY_TOL = 1e-10
RANK_CUTOFF_TOL = 1e-10


@dataclass(frozen=True)
class BicomplexHilbertSpace:
    """C^dim e + C^dim e† with the componentwise inner product."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")


class FiniteRankOperator:
    """K(f) = sum_i sigma_i <f, g_i> g_i with hyperbolic-nonnegative
    sigma_i and an orthogonal (not necessarily normalized) family g_i."""

    def __init__(
        self,
        sigmas: Sequence[HyperbolicValue],
        gs: Sequence[BicomplexVector],
        ambient: Optional[BicomplexHilbertSpace] = None,
        orthogonality_tol: float = ORTHOGONALITY_TOL,
    ):
        sigmas = list(sigmas)
        gs = list(gs)
        if len(sigmas) != len(gs):
            raise ShapeMismatch(f"{len(sigmas)} coefficients vs {len(gs)} vectors")
        if not gs:
            raise ShapeMismatch("finite-rank operator needs at least one term")
        dim = len(gs[0])
        if any(len(g) != dim for g in gs):
            raise ShapeMismatch("g vectors have mixed lengths")
        if ambient is None:
            ambient = BicomplexHilbertSpace(dim)
        elif ambient.dim != dim:
            raise ShapeMismatch(f"ambient dim {ambient.dim} vs vectors of length {dim}")
        for s in sigmas:
            if s.squared:
                raise ValueError("sigma coefficients must be plain (unsquared) values")
        _check_orthogonal(gs, orthogonality_tol)
        self.sigmas = sigmas
        self.gs = gs
        self.ambient = ambient

    @property
    def backend(self) -> str:
        return self.gs[0].backend

    @property
    def rank_bound(self) -> int:
        return len(self.gs)

    def apply(self, f: BicomplexVector) -> BicomplexVector:
        if len(f) != self.ambient.dim:
            raise ShapeMismatch(f"vector length {len(f)} vs ambient {self.ambient.dim}")
        out = BicomplexVector.zeros(self.ambient.dim, self.backend)
        for sigma, g in zip(self.sigmas, self.gs):
            coeff = sigma.to_scalar(self.backend) * inner_product(f, g)
            out = out + g.scale(coeff)
        return out

    def to_matrix(self) -> BicomplexMatrix:
        """Dense form sum_i sigma_i g_i g_i*."""
        n = self.ambient.dim
        backend = self.backend
        zero = GaussianRational(0) if backend == EXACT else 0j
        m1 = [[zero] * n for _ in range(n)]
        m2 = [[zero] * n for _ in range(n)]
        for sigma, g in zip(self.sigmas, self.gs):
            s = sigma.to_scalar(backend)
            for a in range(n):
                for b in range(n):
                    m1[a][b] = m1[a][b] + s.c1 * g.v1[a] * g.v1[b].conjugate()
                    m2[a][b] = m2[a][b] + s.c2 * g.v2[a] * g.v2[b].conjugate()
        return BicomplexMatrix(ComplexMatrix(m1, backend), ComplexMatrix(m2, backend))


def _check_orthogonal(gs: Sequence[BicomplexVector], tol: float):
    exact = gs[0].backend == EXACT
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            ip = inner_product(gs[i], gs[j])
            if exact:
                if not ip.is_zero():
                    raise ValueError(f"g[{i}] and g[{j}] are not orthogonal")
            else:
                scale = max(_flt_norm(gs[i]) * _flt_norm(gs[j]), 1e-300)
                if max(abs(complex(ip.c1)), abs(complex(ip.c2))) > tol * scale:
                    raise ValueError(f"g[{i}] and g[{j}] are not orthogonal within {tol}")


def _flt_norm(g: BicomplexVector) -> float:
    return max(
        math.sqrt(sum(abs(complex(x)) ** 2 for x in g.v1)),
        math.sqrt(sum(abs(complex(x)) ** 2 for x in g.v2)),
    )


def apply(t: Union[FiniteRankOperator, BicomplexMatrix], f: BicomplexVector) -> BicomplexVector:
    """Componentwise action T v = T1 v1 e + T2 v2 e†."""
    if isinstance(t, FiniteRankOperator):
        return t.apply(f)
    return mat_vec(t, f)


def hyperbolic_operator_norm(t: Union[FiniteRankOperator, BicomplexMatrix]) -> HyperbolicValue:
    """||T||_h = ||T1|| e + ||T2|| e† (largest singular value per
    component, computed through the Jacobi engine on T*T)."""
    if isinstance(t, FiniteRankOperator):
        t = t.to_matrix()
    n1 = spectral_norm(t.m1.to_numpy())
    n2 = spectral_norm(t.m2.to_numpy())
    return HyperbolicValue(n1, n2, squared=False)


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

@dataclass
class OperatorSpectrum:
    """Spectrum data per Definition-7 semantics.

    ``component_spectra`` generates the full (infinite) spectrum through
    ``contains``; ``point_spectrum`` holds the materialized pairings with
    both-components-nonzero eigenvectors.  ``noninvertible_flags`` marks
    which point-spectrum members are themselves zero divisors.
    """

    component_spectra: Tuple[list, list]
    point_spectrum: List[Tuple[BicomplexScalar, BicomplexVector]]
    backend: str
    tol: float = 0.0

    def contains(self, lam: BicomplexScalar) -> bool:
        """lam*I - T noninvertible <=> either component hits its spectrum."""
        return self._component_hits(lam.c1, 0) or self._component_hits(lam.c2, 1)

    def _component_hits(self, value, which: int) -> bool:
        spec = self.component_spectra[which]
        if self.backend == EXACT:
            return any(value == s for s in spec)
        v = complex(value)
        return any(abs(v - complex(s)) <= self.tol for s in spec)

    def eigenvalues(self) -> List[BicomplexScalar]:
        return [lam for lam, _ in self.point_spectrum]

    def noninvertible_flags(self) -> List[bool]:
        return [not lam.is_invertible() for lam, _ in self.point_spectrum]

    def invertible_members(self) -> List[BicomplexScalar]:
        return [lam for lam, _ in self.point_spectrum if lam.is_invertible()]


def _is_diagonal(m: ComplexMatrix) -> bool:
    zero_ok = (
        (lambda x: x.is_zero()) if m.backend == EXACT else (lambda x: x == 0)
    )
    return all(
        zero_ok(m[i, j]) for i in range(m.rows) for j in range(m.cols) if i != j
    )


def _component_spectrum(m: ComplexMatrix, tol: float):
    """Distinct eigenvalues with one eigenvector each, per backend rules."""
    if _is_diagonal(m):
        seen = []
        vectors = {}
        for i in range(m.rows):
            lam = m[i, i]
            if not any(_same(lam, s, m.backend, tol) for s in seen):
                seen.append(lam)
                vectors[len(seen) - 1] = _basis_col(m.rows, i, m.backend)
        return seen, [vectors[k] for k in range(len(seen))]
    if m.backend == EXACT:
        from .jordan import char_poly, split_eigenvalues
        from .matrices import exact_kernel

        roots = split_eigenvalues(char_poly(m))
        vals = [r for r, _ in roots]
        vecs = []
        for lam in vals:
            shifted = m - ComplexMatrix.identity(m.rows, EXACT).scale(lam)
            vecs.append(list(exact_kernel(shifted)[0]))
        return vals, vecs
    data = hermitian_eigen(m)  # raises NotSelfAdjoint outside its domain
    vals: list = []
    vecs = []
    for i, v in enumerate(data.values):
        if not any(_same(complex(v), complex(s), FLOAT, tol) for s in vals):
            vals.append(complex(v))
            vecs.append(data.vectors.col(i))
    return vals, vecs


def _same(a, b, backend: str, tol: float) -> bool:
    if backend == EXACT:
        return a == b
    return abs(complex(a) - complex(b)) <= tol


def _basis_col(n: int, k: int, backend: str):
    one = GaussianRational(1) if backend == EXACT else complex(1)
    zero = GaussianRational(0) if backend == EXACT else 0j
    return [one if i == k else zero for i in range(n)]


def spectrum(t: Union[FiniteRankOperator, BicomplexMatrix], tol: float = 1e-10) -> OperatorSpectrum:
    """Spectrum of a bicomplex operator at finite dimension.

    Exact backend covers any matrix whose characteristic polynomials split
    over the Gaussian rationals; the float path covers self-adjoint and
    diagonal operators (the test-operator families used by the tower and
    approximation demos).
    """
    if isinstance(t, FiniteRankOperator):
        t = t.to_matrix()
    if not t.is_square():
        raise NotSquare("spectrum needs a square matrix")
    vals1, vecs1 = _component_spectrum(t.m1, tol)
    vals2, vecs2 = _component_spectrum(t.m2, tol)
    point = []
    for l1, v1 in zip(vals1, vecs1):
        for l2, v2 in zip(vals2, vecs2):
            lam = BicomplexScalar(
                l1 if t.backend == EXACT else complex(l1),
                l2 if t.backend == EXACT else complex(l2),
            )
            point.append((lam, BicomplexVector(v1, v2, t.backend)))
    return OperatorSpectrum(
        component_spectra=(vals1, vals2),
        point_spectrum=point,
        backend=t.backend,
        tol=tol,
    )


# ---------------------------------------------------------------------------
# compact-operator tower (Theorem-5-style report)
# ---------------------------------------------------------------------------

def power_sigmas(count: int, p1: int = 1, p2: int = 2) -> List[HyperbolicValue]:
    """sigma_i = (1/i^p1, 1/i^p2), exact, for i = 1..count."""
    return [
        HyperbolicValue(Fraction(1, i**p1), Fraction(1, i**p2)) for i in range(1, count + 1)
    ]


def diagonal_tower_operator(sigmas: Sequence[HyperbolicValue], dim: int) -> FiniteRankOperator:
    """Truncation K_dim = diag(sigma_1 .. sigma_dim) in finite-rank form
    (g_i = standard basis vectors, exact backend)."""
    if len(sigmas) < dim:
        raise ShapeMismatch(f"need {dim} sigmas for dimension {dim}, got {len(sigmas)}")
    gs = [BicomplexVector.basis(dim, i, EXACT) for i in range(dim)]
    return FiniteRankOperator(list(sigmas[:dim]), gs)


@dataclass
class TowerReport:
    """Per-truncation verification data for a sigma-sequence tower."""

    dims: List[int]
    eps: List[Tuple[Fraction, Fraction]]
    truncations: List[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "dims": self.dims,
            "eps": [[str(e1), str(e2)] for e1, e2 in self.eps],
            "truncations": self.truncations,
        }


def check_compact_spectral_properties(
    sigmas: Sequence[HyperbolicValue],
    dims: Sequence[int],
    eps: Sequence[Tuple[Fraction, Fraction]] = ((Fraction(1, 10), Fraction(1, 10)),),
) -> TowerReport:
    """Verify the compact-operator spectrum properties on a diagonal tower.

    For each truncation dimension n the report records:

    * whether every invertible member of the materialized point family is
      certified an eigenvalue by the determinant criterion (both components
      of det(lam I - K) vanish);
    * for every eps pair, how many diagonal eigenvalues sit outside the
      open hyperbolic ball of that radius around 0 (either component >= eps)
      and how many sit strictly beyond it in both components;
    * the finite spectrum listing with 0 adjoined as the truncation-limit
      witness.

    Assertions live in the test suite; this is a report.
    """
    dims = sorted(dims)
    if len(sigmas) < dims[-1]:
        raise ShapeMismatch(f"need {dims[-1]} sigmas, got {len(sigmas)}")
    eps = [tuple(Fraction(x) for x in pair) for pair in eps]
    report = TowerReport(dims=list(dims), eps=list(eps))
    for n in dims:
        op = diagonal_tower_operator(sigmas, n)
        spec = spectrum(op)
        diag = [(s.h1, s.h2) for s in sigmas[:n]]
        certified = []
        for lam, _vec in spec.point_spectrum:
            if not lam.is_invertible():
                continue
            certified.append(_certify_diagonal_eigenvalue(lam, diag))
        eps_counts = []
        for e1, e2 in eps:
            outside_ball = sum(1 for h1, h2 in diag if h1 >= e1 or h2 >= e2)
            beyond_both = sum(1 for h1, h2 in diag if h1 > e1 and h2 > e2)
            eps_counts.append(
                {
                    "eps": [str(e1), str(e2)],
                    "outside_ball": outside_ball,
                    "beyond_both": beyond_both,
                }
            )
        listing = sorted({(str(h1), str(h2)) for h1, h2 in diag})
        report.truncations.append(
            {
                "dim": n,
                "invertible_members": len(certified),
                "all_certified_eigenvalues": bool(certified) and all(certified),
                "eps_counts": eps_counts,
                "spectrum_listing": listing + [("0", "0")],
                "zero_adjoined": True,
            }
        )
    return report


def _certify_diagonal_eigenvalue(lam: BicomplexScalar, diag) -> bool:
    """det(lam I - K) for diagonal K is the diagonal product; the
    certificate demands both components vanish (exactly, exact backend)."""
    det1 = GaussianRational(1)
    det2 = GaussianRational(1)
    for h1, h2 in diag:
        det1 = det1 * (lam.c1 - GaussianRational(h1))
        det2 = det2 * (lam.c2 - GaussianRational(h2))
    return det1.is_zero() and det2.is_zero()


def operator_range(t: BicomplexMatrix):
    """Column space of each component as an exact canonical Subspace pair.

    At finite dimension the range is trivially closed; this exists so the
    closed-range property of I - K has a concrete (degenerate) witness.
    """
    from .lattice import BicomplexSubspace, Subspace

    if t.backend != EXACT:
        raise ValueError("operator_range is exact-only")
    cols1 = [t.m1.col(j) for j in range(t.cols)]
    cols2 = [t.m2.col(j) for j in range(t.cols)]
    return BicomplexSubspace(
        Subspace(t.rows, [tuple(c) for c in cols1]),
        Subspace(t.rows, [tuple(c) for c in cols2]),
    )


# ---------------------------------------------------------------------------
# Riesz witness
# ---------------------------------------------------------------------------

def riesz_witness(x_basis: Sequence[BicomplexVector], r: float) -> BicomplexVector:
    """Unit vector at prescribed hyperbolic distance (r, r) from a proper
    subspace X = X1 e + X2 e†.

    Per component: y_i = r*u_i + sqrt(1-r^2)*w_i with u_i a unit vector
    orthogonal to X_i and w_i a unit vector inside X_i, so the orthogonal
    projection residual has norm exactly r.  Both components of X must be
    proper and nonzero (with X = {0} every unit vector has distance 1, so
    no witness at r < 1 exists).
    """
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie strictly between 0 and 1")
    if not x_basis:
        raise ValueError("subspace basis must be nonempty (X must be nonzero)")
    n = len(x_basis[0])
    comps = []
    for which in (1, 2):
        cols = np.array(
            [[complex(v.v1[i] if which == 1 else v.v2[i]) for v in x_basis] for i in range(n)],
            dtype=np.complex128,
        )
        comps.append(_component_witness(cols, r, which))
    return BicomplexVector(list(comps[0]), list(comps[1]), FLOAT)


def _component_witness(cols: np.ndarray, r: float, which: int) -> np.ndarray:
    n = cols.shape[0]
    gram = cols @ cols.conj().T  # range(B B*) = span of the columns
    data = hermitian_eigen(gram)
    vals = np.array(data.values)
    vecs = data.vectors_numpy()
    cut = RANK_CUTOFF_TOL * max(float(vals.max()), 1e-300)
    inside = [i for i, v in enumerate(vals) if v > cut]
    outside = [i for i, v in enumerate(vals) if v <= cut]
    if not inside:
        raise ValueError(f"component {which} of X is the zero subspace; no witness below distance 1")
    if not outside:
        raise SubspaceIsFull(f"component {which} of X is the whole space")
    w = vecs[:, inside[-1]]  # unit vector inside X (top of the range)
    u = vecs[:, outside[0]]  # unit vector orthogonal to X
    return r * u + math.sqrt(1.0 - r * r) * w


def riesz_residuals(x_basis: Sequence[BicomplexVector], y: BicomplexVector):
    """(norm components of y, projection-residual distances to X)."""
    n = len(y)
    out_norm = []
    out_dist = []
    for which in (1, 2):
        cols = np.array(
            [[complex(v.v1[i] if which == 1 else v.v2[i]) for v in x_basis] for i in range(n)],
            dtype=np.complex128,
        )
        yv = np.array([complex(y.v1[i] if which == 1 else y.v2[i]) for i in range(n)])
        q, _ = np.linalg.qr(cols)
        resid = yv - q @ (q.conj().T @ yv)
        out_norm.append(float(np.linalg.norm(yv)))
        out_dist.append(float(np.linalg.norm(resid)))
    return tuple(out_norm), tuple(out_dist)


# ---------------------------------------------------------------------------
# norm-limit / finite-rank approximation (Theorem-6/7-style report)
# ---------------------------------------------------------------------------

@dataclass
class ApproxReport:
    """Best rank-r approximation errors and the canonical finite-rank forms."""

    ranks: List[int]
    errors: List[Tuple[float, float]]
    expected: List[Tuple[float, float]]
    nonincreasing: bool
    canonical_forms: Optional[List[FiniteRankOperator]]
    canonical_note: str

    def to_dict(self) -> dict:
        return {
            "ranks": self.ranks,
            "errors": [list(e) for e in self.errors],
            "expected_next_sigma": [list(e) for e in self.expected],
            "nonincreasing": self.nonincreasing,
            "canonical_form_available": self.canonical_forms is not None,
            "canonical_note": self.canonical_note,
        }


def _singular_data(arr: np.ndarray):
    """Singular triples from the Jacobi engine: eigen of A*A gives (s^2, v),
    then u = A v / s."""
    data = hermitian_eigen(arr.conj().T @ arr)
    order = np.argsort(data.values)[::-1]
    vals = np.array(data.values)[order]
    v = data.vectors_numpy()[:, order]
    sigmas = np.sqrt(np.clip(vals, 0.0, None))
    us = []
    for i, s in enumerate(sigmas):
        if s > 1e-300:
            us.append((arr @ v[:, i]) / s)
        else:
            us.append(np.zeros(arr.shape[0], dtype=np.complex128))
    return sigmas, np.array(us).T, v


def norm_limit_demo(
    t: BicomplexMatrix,
    ranks: Sequence[int],
    psd_tol: float = 1e-10,
) -> ApproxReport:
    """Best rank-r hyperbolic-norm approximation errors for a truncated
    operator, with the approximants in canonical finite-rank form when
    that form exists.

    Per component the best rank-r approximant keeps the r largest singular
    triples, so the error is the (r+1)-th singular value.  The single-family
    canonical form sum sigma_i <f, g_i> g_i is self-adjoint positive by
    construction, so it is only assembled when each component of t is
    Hermitian positive semidefinite within tolerance; otherwise the error
    sequence is still exact but canonical_forms is None.
    """
    t = t.to_float()
    if not t.is_square():
        raise NotSquare("norm_limit_demo needs a square matrix")
    a1 = t.m1.to_numpy()
    a2 = t.m2.to_numpy()
    s1, u1, v1 = _singular_data(a1)
    s2, u2, v2 = _singular_data(a2)
    errors = []
    expected = []
    for r in ranks:
        if r < 0 or r > t.rows:
            raise ValueError(f"rank {r} outside [0, {t.rows}]")
        k1 = u1[:, :r] @ np.diag(s1[:r]) @ v1[:, :r].conj().T if r else np.zeros_like(a1)
        k2 = u2[:, :r] @ np.diag(s2[:r]) @ v2[:, :r].conj().T if r else np.zeros_like(a2)
        errors.append((spectral_norm(a1 - k1), spectral_norm(a2 - k2)))
        expected.append(
            (
                float(s1[r]) if r < len(s1) else 0.0,
                float(s2[r]) if r < len(s2) else 0.0,
            )
        )
    nonincreasing = all(
        errors[i][0] <= errors[i - 1][0] + 1e-12 and errors[i][1] <= errors[i - 1][1] + 1e-12
        for i in range(1, len(errors))
    )
    forms, note = _canonical_forms(t, ranks, psd_tol)
    return ApproxReport(
        ranks=list(ranks),
        errors=errors,
        expected=expected,
        nonincreasing=nonincreasing,
        canonical_forms=forms,
        canonical_note=note,
    )


def _canonical_forms(t: BicomplexMatrix, ranks: Sequence[int], psd_tol: float):
    a1 = t.m1.to_numpy()
    a2 = t.m2.to_numpy()
    scale = max(float(np.linalg.norm(a1)), float(np.linalg.norm(a2)), 1e-300)
    for arr in (a1, a2):
        if float(np.linalg.norm(arr - arr.conj().T)) > psd_tol * scale:
            return None, "not self-adjoint: single-family canonical form unavailable"
    e1 = hermitian_eigen(a1)
    e2 = hermitian_eigen(a2)
    if min(e1.values) < -psd_tol * scale or min(e2.values) < -psd_tol * scale:
        return None, "negative component eigenvalue: canonical form needs PSD components"
    # descending eigenvalues, identity pairing; eigenvectors are orthonormal
    vals1 = list(reversed(e1.values))
    vals2 = list(reversed(e2.values))
    p1 = e1.vectors_numpy()[:, ::-1]
    p2 = e2.vectors_numpy()[:, ::-1]
    n = t.rows
    gs = [
        BicomplexVector([p1[i, k] for i in range(n)], [p2[i, k] for i in range(n)], FLOAT)
        for k in range(n)
    ]
    sigmas = [
        HyperbolicValue(max(v1, 0.0), max(v2, 0.0)) for v1, v2 in zip(vals1, vals2)
    ]
    forms = []
    for r in ranks:
        if r == 0:
            forms.append(None)  # rank 0 has no terms; error row still applies
        else:
            forms.append(FiniteRankOperator(sigmas[:r], gs[:r]))
    return forms, "canonical form from componentwise PSD eigendecomposition"
