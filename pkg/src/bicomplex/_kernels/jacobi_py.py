"""Pure-Python (numpy) fallback for the Hermitian Jacobi eigensolver.

Same rotation sequence as the compiled kernel: row-cyclic sweeps over the
strict upper triangle, each rotation zeroing one off-diagonal pair with a
unitary 2x2 rotation carrying the pivot's phase.
"""

import math

import numpy as np


def jacobi_eigh(a_in, tol=1e-13, max_sweeps=100):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns (diag, vectors, sweeps, off_rel) where ``diag`` is the real
    diagonal after the final sweep (unsorted), ``vectors`` has the
    corresponding columns with a_in = V diag(w) V*, and ``off_rel`` is the
    final off-diagonal Frobenius mass relative to ||a_in||_F.  Convergence
    means off_rel <= tol; the caller decides what to do otherwise.
    """
    a = np.array(a_in, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    norm = float(np.linalg.norm(a))
    if n == 1 or norm == 0.0:
        return a.diagonal().real.copy(), v, 0, 0.0
    # skipping pivots below this still leaves off_rel <= tol at the end
    skip = tol * norm / (2.0 * n)
    sweeps = 0
    off = _off_mass(a)
    while off > tol * norm and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = a[p, q]
                m = abs(beta)
                if m <= skip:
                    continue
                _rotate(a, v, p, q, beta, m)
        off = _off_mass(a)
    return a.diagonal().real.copy(), v, sweeps, off / norm


def _off_mass(a):
    d = a - np.diag(a.diagonal())
    return float(np.linalg.norm(d))


def _rotate(a, v, p, q, beta, m):
    alpha = a[p, p].real
    gamma = a[q, q].real
    tau = (gamma - alpha) / (2.0 * m)
    # smaller-magnitude root of t^2 - 2 tau t - 1 = 0
    if tau >= 0.0:
        t = -1.0 / (tau + math.sqrt(tau * tau + 1.0))
    else:
        t = 1.0 / (-tau + math.sqrt(tau * tau + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    f = beta / m  # pivot phase

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p + s * np.conj(f) * col_q
    a[:, q] = -s * f * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p + s * f * row_q
    a[q, :] = -s * np.conj(f) * row_p + c * row_q
    # the pivot pair is zero by construction; force it exactly
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp + s * np.conj(f) * vq
    v[:, q] = -s * f * vp + c * vq
