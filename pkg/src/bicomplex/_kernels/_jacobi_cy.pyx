# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Hermitian Jacobi eigensolver (row-cyclic complex rotations).

Mirrors jacobi_py.jacobi_eigh exactly: same pivot order, same rotation
parameters, same convergence rule.
"""

import numpy as np

from libc.math cimport sqrt


def jacobi_eigh(a_in, double tol=1e-13, int max_sweeps=100):
    """See jacobi_py.jacobi_eigh; identical contract."""
    a = np.array(a_in, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)

    cdef double complex[:, ::1] A = a
    cdef double complex[:, ::1] V = v

    cdef double norm = _frobenius(A, n)
    cdef int sweeps = 0
    if n == 1 or norm == 0.0:
        return a.diagonal().real.copy(), v, 0, 0.0

    cdef double skip = tol * norm / (2.0 * n)
    cdef double off = _off_mass(A, n)
    cdef Py_ssize_t p, q, i
    cdef double complex beta, f, cf, tmp_p, tmp_q
    cdef double m, alpha, gamma, tau, t, c, s

    while off > tol * norm and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = A[p, q]
                m = abs(beta)
                if m <= skip:
                    continue
                alpha = A[p, p].real
                gamma = A[q, q].real
                tau = (gamma - alpha) / (2.0 * m)
                # smaller-magnitude root of t^2 - 2 tau t - 1 = 0
                if tau >= 0.0:
                    t = -1.0 / (tau + sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (-tau + sqrt(tau * tau + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                f = beta / m
                cf = f.conjugate()

                for i in range(n):
                    tmp_p = A[i, p]
                    tmp_q = A[i, q]
                    A[i, p] = c * tmp_p + s * cf * tmp_q
                    A[i, q] = -s * f * tmp_p + c * tmp_q
                for i in range(n):
                    tmp_p = A[p, i]
                    tmp_q = A[q, i]
                    A[p, i] = c * tmp_p + s * f * tmp_q
                    A[q, i] = -s * cf * tmp_p + c * tmp_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real

                for i in range(n):
                    tmp_p = V[i, p]
                    tmp_q = V[i, q]
                    V[i, p] = c * tmp_p + s * cf * tmp_q
                    V[i, q] = -s * f * tmp_p + c * tmp_q
        off = _off_mass(A, n)
    return a.diagonal().real.copy(), v, sweeps, off / norm


cdef double _frobenius(double complex[:, ::1] A, Py_ssize_t n):
    cdef double total = 0.0
    cdef double m
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            m = abs(A[i, j])
            total += m * m
    return sqrt(total)


cdef double _off_mass(double complex[:, ::1] A, Py_ssize_t n):
    cdef double total = 0.0
    cdef double m
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                m = abs(A[i, j])
                total += m * m
    return sqrt(total)
