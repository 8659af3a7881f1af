"""Floating-point spectral decomposition of self-adjoint bicomplex matrices.

The engine is a from-scratch cyclic complex Jacobi eigensolver (compiled
kernel with a pure-Python fallback, see ``_kernels``).  Jacobi is
self-verifying through its off-diagonal mass and plenty accurate at desk
scale, which is why it was picked over Householder + QL.

A self-adjoint bicomplex matrix diagonalizes as A = P D P* with P unitary
and D hyperbolic-real; because the component spectra can be paired in any
order, an n x n matrix with simple component spectra has n! distinct
diagonalizations, all of which ``enumerate_diagonalizations`` produces.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from ._kernels import jacobi_eigh
from .errors import DegenerateSpectrum, NoConvergence, NotSelfAdjoint
from .matrices import BicomplexMatrix, ComplexMatrix

#: relative off-diagonal mass target for the Jacobi sweeps
JACOBI_TOL = 1e-13
#: sweep cap; Jacobi converges for Hermitian input, this is a safety net
JACOBI_MAX_SWEEPS = 100
#: relative tolerance for the self-adjointness precondition
SELF_ADJOINT_TOL = 1e-10
#: relative eigenvalue-gap tolerance below which pairings are ill-defined
SEPARATION_TOL = 1e-8


@dataclass
class HermitianEigenData:
    """Eigendecomposition A = V diag(values) V* with ascending values."""

    values: List[float]
    vectors: ComplexMatrix
    sweeps: int

    def vectors_numpy(self) -> np.ndarray:
        return self.vectors.to_numpy()


@dataclass
class BicomplexSpectralData:
    """One unitary diagonalization A = P D P* of a self-adjoint matrix.

    ``pairing`` records which component-2 eigenvalue sits at each diagonal
    slot (component-1 order is ascending and fixed).
    """

    p: BicomplexMatrix
    d: BicomplexMatrix
    pairing: Tuple[int, ...]
    residuals: dict

    def diagonal_pairs(self) -> List[Tuple[float, float]]:
        n = self.d.rows
        return [(self.d.m1[i, i].real, self.d.m2[i, i].real) for i in range(n)]


def _to_array(a: ComplexMatrix) -> np.ndarray:
    return a.to_numpy()


def hermitian_eigen(
    a: Union[ComplexMatrix, np.ndarray],
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
    self_adjoint_tol: float = SELF_ADJOINT_TOL,
) -> HermitianEigenData:
    """Eigendecomposition of one Hermitian component matrix.

    Cyclic Jacobi rotations run until the off-diagonal Frobenius mass
    drops below tol * ||A||_F.  Eigenvalues come back ascending; each
    eigenvector column is phase-fixed so its largest-modulus entry is
    real positive.
    """
    arr = a if isinstance(a, np.ndarray) else _to_array(a)
    arr = np.asarray(arr, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSelfAdjoint("hermitian_eigen needs a square matrix")
    scale = max(float(np.linalg.norm(arr)), 1e-300)
    if float(np.linalg.norm(arr - arr.conj().T)) > self_adjoint_tol * scale:
        raise NotSelfAdjoint(
            f"matrix is not Hermitian within relative tolerance {self_adjoint_tol}"
        )
    arr = 0.5 * (arr + arr.conj().T)  # symmetrize roundoff before sweeping
    w, v, sweeps, off_rel = jacobi_eigh(arr, tol, max_sweeps)
    if off_rel > tol:
        raise NoConvergence(sweeps, off_rel)
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    v = _fix_phases(v)
    return HermitianEigenData(values=[float(x) for x in w], vectors=ComplexMatrix.from_numpy(v), sweeps=sweeps)


def _fix_phases(v: np.ndarray) -> np.ndarray:
    v = v.copy()
    for j in range(v.shape[1]):
        k = int(np.argmax(np.abs(v[:, j])))
        pivot = v[k, j]
        if abs(pivot) > 0:
            v[:, j] *= abs(pivot) / pivot
    return v


def _check_self_adjoint(a: BicomplexMatrix, tol: float):
    for which, m in ((1, a.m1), (2, a.m2)):
        arr = _to_array(m)
        scale = max(float(np.linalg.norm(arr)), 1e-300)
        if float(np.linalg.norm(arr - arr.conj().T)) > tol * scale:
            raise NotSelfAdjoint(f"component {which} is not self-adjoint within {tol}")


def selfadjoint_diagonalize(
    a: BicomplexMatrix,
    pairing: Union[str, Sequence[int]] = "identity",
    tol: float = JACOBI_TOL,
    self_adjoint_tol: float = SELF_ADJOINT_TOL,
) -> BicomplexSpectralData:
    """Diagonalize a self-adjoint bicomplex matrix as A = P D P*.

    Component eigensolves are independent; the pairing permutation decides
    which component-2 eigenvalue shares a diagonal slot (and an eigenvector
    column) with each component-1 eigenvalue.
    """
    a = a.to_float()
    _check_self_adjoint(a, self_adjoint_tol)
    e1 = hermitian_eigen(a.m1, tol)
    e2 = hermitian_eigen(a.m2, tol)
    return _assemble(a, e1, e2, _as_permutation(pairing, a.rows))


def _as_permutation(pairing, n: int) -> Tuple[int, ...]:
    if isinstance(pairing, str):
        if pairing != "identity":
            raise ValueError(f"unknown pairing {pairing!r}")
        return tuple(range(n))
    perm = tuple(int(i) for i in pairing)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    return perm


def _assemble(
    a: BicomplexMatrix, e1: HermitianEigenData, e2: HermitianEigenData, perm: Tuple[int, ...]
) -> BicomplexSpectralData:
    n = a.rows
    p1 = e1.vectors_numpy()
    p2 = e2.vectors_numpy()[:, list(perm)]
    d1 = np.diag(np.array(e1.values, dtype=np.complex128))
    d2 = np.diag(np.array([e2.values[i] for i in perm], dtype=np.complex128))
    residuals = {
        "unitarity": (_unitarity(p1), _unitarity(p2)),
        "reconstruction": (
            _reconstruction(a.m1.to_numpy(), p1, d1),
            _reconstruction(a.m2.to_numpy(), p2, d2),
        ),
        "sweeps": (e1.sweeps, e2.sweeps),
    }
    p = BicomplexMatrix(ComplexMatrix.from_numpy(p1), ComplexMatrix.from_numpy(p2))
    d = BicomplexMatrix(ComplexMatrix.from_numpy(d1), ComplexMatrix.from_numpy(d2))
    return BicomplexSpectralData(p=p, d=d, pairing=perm, residuals=residuals)


def _unitarity(p: np.ndarray) -> float:
    n = p.shape[0]
    return float(np.linalg.norm(p.conj().T @ p - np.eye(n)))


def _reconstruction(a: np.ndarray, p: np.ndarray, d: np.ndarray) -> float:
    scale = max(float(np.linalg.norm(a)), 1e-300)
    return float(np.linalg.norm(a - p @ d @ p.conj().T)) / scale


def enumerate_diagonalizations(
    a: BicomplexMatrix,
    tol: float = JACOBI_TOL,
    separation_tol: float = SEPARATION_TOL,
    self_adjoint_tol: float = SELF_ADJOINT_TOL,
) -> List[BicomplexSpectralData]:
    """All n! pairing-distinct diagonalizations of a self-adjoint matrix.

    Requires simple component spectra: if any eigenvalue gap falls below
    separation_tol * spectral radius the pairing count is discontinuous
    and DegenerateSpectrum is raised.
    """
    a = a.to_float()
    _check_self_adjoint(a, self_adjoint_tol)
    e1 = hermitian_eigen(a.m1, tol)
    e2 = hermitian_eigen(a.m2, tol)
    n = a.rows
    for which, vals in ((1, e1.values), (2, e2.values)):
        radius = max(max(abs(v) for v in vals), 1e-300)
        gaps = [abs(x - y) for x, y in itertools.combinations(vals, 2)]
        if gaps and min(gaps) <= separation_tol * radius:
            raise DegenerateSpectrum(
                f"component {which} eigenvalue gap {min(gaps):.3e} below "
                f"{separation_tol} * spectral radius"
            )
    out = []
    for perm in itertools.permutations(range(n)):
        out.append(_assemble(a, e1, e2, tuple(perm)))
    return out


def spectral_norm(arr: np.ndarray, tol: float = JACOBI_TOL) -> float:
    """Largest singular value via the Jacobi engine on A*A."""
    h = arr.conj().T @ arr
    data = hermitian_eigen(h, tol)
    top = max(data.values) if data.values else 0.0
    return math.sqrt(max(top, 0.0))
