"""Shared randomized generators and independent oracles for the tests.

The oracles here deliberately avoid the code paths they check:

* direct bicomplex row-times-column product with scalar arithmetic
  (checks the componentwise matrix product);
* Leibniz permutation-sum determinant (checks Bareiss / LU);
* cofactor-style characteristic polynomial via the permutation sum over
  polynomial entries (checks Faddeev-LeVerrier);
* power iteration on T*T (checks the Jacobi-based operator norm).
"""

from __future__ import annotations

import itertools
import math
import random
import numpy as np

from bicomplex import (
    BicomplexMatrix,
    BicomplexScalar,
    BicomplexVector,
    ComplexMatrix,
    GaussianRational,
    Poly,
)
from bicomplex.scalars import EXACT


def rand_gaussian(rng: random.Random, span: int = 4) -> GaussianRational:
    return GaussianRational(rng.randint(-span, span), rng.randint(-span, span))


def rand_scalar(rng: random.Random, span: int = 4) -> BicomplexScalar:
    return BicomplexScalar(rand_gaussian(rng, span), rand_gaussian(rng, span))


def rand_matrix(rng: random.Random, rows: int, cols: int, span: int = 3) -> BicomplexMatrix:
    return BicomplexMatrix.from_scalar_entries(
        [[rand_scalar(rng, span) for _ in range(cols)] for _ in range(rows)]
    )


def rand_complex_matrix(rng: random.Random, n: int, span: int = 3) -> ComplexMatrix:
    return ComplexMatrix(
        [[rand_gaussian(rng, span) for _ in range(n)] for _ in range(n)], EXACT
    )


def rand_invertible_complex(rng: random.Random, n: int, span: int = 2) -> ComplexMatrix:
    from bicomplex.matrices import bareiss_determinant

    while True:
        m = rand_complex_matrix(rng, n, span)
        if not bareiss_determinant(m).is_zero():
            return m


def rand_vector(rng: random.Random, n: int, span: int = 3) -> BicomplexVector:
    return BicomplexVector.from_scalars([rand_scalar(rng, span) for _ in range(n)])


# -- oracles -----------------------------------------------------------------

def direct_product_oracle(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    """Row-times-column product evaluated with BicomplexScalar arithmetic,
    independent of the componentwise implementation."""
    ae = a.scalar_entries()
    be = b.scalar_entries()
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            s = BicomplexScalar.zero(a.backend)
            for k in range(a.cols):
                s = s + ae[i][k] * be[k][j]
            row.append(s)
        out.append(row)
    return BicomplexMatrix.from_scalar_entries(out)


def leibniz_determinant(m: ComplexMatrix):
    """Permutation-sum determinant; exponential, fine for n <= 5."""
    n = m.rows
    total = GaussianRational(0)
    for perm in itertools.permutations(range(n)):
        sign = _parity(perm)
        term = GaussianRational(1)
        for i in range(n):
            term = term * m[i, perm[i]]
        total = total + (term if sign > 0 else -term)
    return total


def _parity(perm) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def charpoly_oracle(m: ComplexMatrix) -> Poly:
    """det(xI - A) by the permutation sum over polynomial entries."""
    n = m.rows
    x = Poly([GaussianRational(0), GaussianRational(1)])
    entries = [
        [
            (x - Poly([m[i, j]])) if i == j else Poly([-m[i, j]])
            for j in range(n)
        ]
        for i in range(n)
    ]
    total = Poly([GaussianRational(0)])
    for perm in itertools.permutations(range(n)):
        sign = _parity(perm)
        term = Poly([GaussianRational(1)])
        for i in range(n):
            term = term * entries[i][perm[i]]
        if sign < 0:
            term = Poly([-c for c in term.coeffs])
        total = total + term
    return total


def power_iteration_norm(arr: np.ndarray, iters: int = 2000, seed: int = 0) -> float:
    """Largest singular value by power iteration on A*A."""
    rng = np.random.default_rng(seed)
    h = arr.conj().T @ arr
    v = rng.standard_normal(arr.shape[1]) + 1j * rng.standard_normal(arr.shape[1])
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = h @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            return 0.0
        v = w / norm
        lam = norm
    return math.sqrt(lam)


def random_jordan_complex(rng: random.Random, n: int):
    """(A, blocks): A = Q J Q^-1 for a random exact Jordan layout J with
    eigenvalues from a small Gaussian-integer palette."""
    from bicomplex.matrices import exact_inverse

    gr = GaussianRational
    palette = [gr(0), gr(1), gr(-1), gr(2), gr(0, 1)]
    sizes = []
    left = n
    while left > 0:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    lam_for = [rng.choice(palette) for _ in sizes]
    rows = [[gr(0)] * n for _ in range(n)]
    pos = 0
    blocks = {}
    for lam, size in zip(lam_for, sizes):
        for k in range(size):
            rows[pos + k][pos + k] = lam
            if k + 1 < size:
                rows[pos + k][pos + k + 1] = gr(1)
        blocks.setdefault(lam, []).append(size)
        pos += size
    j = ComplexMatrix(rows, EXACT)
    q = rand_invertible_complex(rng, n)
    a = q @ j @ exact_inverse(q)
    return a, {k: tuple(sorted(v, reverse=True)) for k, v in blocks.items()}


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_selfadjoint_bicomplex(rng: np.random.Generator, n: int) -> BicomplexMatrix:
    """Random float-backend self-adjoint bicomplex matrix."""
    out = []
    for _ in range(2):
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        out.append(ComplexMatrix.from_numpy(0.5 * (z + z.conj().T)))
    return BicomplexMatrix(out[0], out[1])
