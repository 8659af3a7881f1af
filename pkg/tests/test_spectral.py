"""Self-adjoint diagonalization via the Jacobi engine."""

import math

import numpy as np
import pytest

from bicomplex import (
    BicomplexMatrix,
    ComplexMatrix,
    DegenerateSpectrum,
    GaussianRational,
    NotSelfAdjoint,
    adjoint,
    enumerate_diagonalizations,
    hermitian_eigen,
    selfadjoint_diagonalize,
)
from bicomplex.examples import example_one_matrix, example_one_scalar
from bicomplex.scalars import FLOAT

from helpers import random_selfadjoint_bicomplex, random_unitary


def test_hermitian_eigen_diagonal():
    data = hermitian_eigen(ComplexMatrix.diagonal([1.0, 2.0], FLOAT))
    assert data.values == [1.0, 2.0]
    assert np.allclose(data.vectors_numpy(), np.eye(2))


def test_hermitian_eigen_offdiagonal_pair():
    # [[0, z], [conj(z), 0]] has eigenvalues ±|z|
    z = 1 + 3j
    m = ComplexMatrix([[0.0, z], [z.conjugate(), 0.0]], FLOAT)
    data = hermitian_eigen(m)
    r = abs(z)
    assert abs(data.values[0] + r) < 1e-12 and abs(data.values[1] - r) < 1e-12


def test_hermitian_eigen_reconstruction_random():
    rng = np.random.default_rng(5)
    for _ in range(5):
        v = random_unitary(rng, 6)
        d = np.sort(rng.standard_normal(6))
        a = v @ np.diag(d) @ v.conj().T
        data = hermitian_eigen(ComplexMatrix.from_numpy(a))
        w = np.array(data.values)
        vv = data.vectors_numpy()
        assert np.linalg.norm(a @ vv - vv @ np.diag(w)) <= 1e-10 * np.linalg.norm(a)
        assert np.linalg.norm(vv.conj().T @ vv - np.eye(6)) <= 1e-10
        assert np.allclose(w, d, atol=1e-10)


def test_hermitian_eigen_rejects_nonhermitian():
    with pytest.raises(NotSelfAdjoint):
        hermitian_eigen(ComplexMatrix([[0.0, 1.0], [0.0, 0.0]], FLOAT))


def test_hermitian_eigen_sweep_cap():
    from bicomplex import NoConvergence

    m = ComplexMatrix([[1.0, 2.0], [2.0, -1.0]], FLOAT)
    with pytest.raises(NoConvergence):
        hermitian_eigen(m, max_sweeps=0)


def test_phase_convention():
    rng = np.random.default_rng(7)
    a = random_selfadjoint_bicomplex(rng, 4)
    data = hermitian_eigen(a.m1)
    v = data.vectors_numpy()
    for j in range(4):
        k = int(np.argmax(np.abs(v[:, j])))
        assert abs(v[k, j].imag) < 1e-12 and v[k, j].real > 0


def _example_one_float():
    return example_one_matrix(example_one_scalar()).to_float()


def test_selfadjoint_diagonalize_identity_pairing():
    a = _example_one_float()
    data = selfadjoint_diagonalize(a, "identity")
    m1 = math.sqrt(10)
    m2 = math.sqrt(50)
    # identity pairing carries the hyperbolic norm pair ±|z|_h up to order
    pairs = sorted(data.diagonal_pairs())
    assert abs(pairs[0][0] + m1) < 1e-9 and abs(pairs[0][1] + m2) < 1e-9
    assert abs(pairs[1][0] - m1) < 1e-9 and abs(pairs[1][1] - m2) < 1e-9
    assert max(data.residuals["reconstruction"]) < 1e-9
    assert max(data.residuals["unitarity"]) < 1e-9


def test_selfadjoint_diagonalize_swap_pairing():
    a = _example_one_float()
    data = selfadjoint_diagonalize(a, (1, 0))
    m1 = math.sqrt(10)
    m2 = math.sqrt(50)
    pairs = sorted(data.diagonal_pairs())
    # swapped pairing: (−|c1|, +|c2|) and (+|c1|, −|c2|)
    assert abs(pairs[0][0] + m1) < 1e-9 and abs(pairs[0][1] - m2) < 1e-9
    assert abs(pairs[1][0] - m1) < 1e-9 and abs(pairs[1][1] + m2) < 1e-9
    assert max(data.residuals["reconstruction"]) < 1e-9


def test_selfadjoint_diagonalize_real_diagonal_input():
    a = BicomplexMatrix(
        ComplexMatrix.diagonal([1.0, 2.0], FLOAT), ComplexMatrix.diagonal([3.0, 4.0], FLOAT)
    )
    data = selfadjoint_diagonalize(a)
    assert data.diagonal_pairs() == [(1.0, 3.0), (2.0, 4.0)]
    p = data.p
    # P is a permutation-phase matrix here (identity, by the phase fix)
    assert p.approx_eq(BicomplexMatrix.identity(2, FLOAT), 1e-12)


def test_selfadjoint_rejects_nonselfadjoint():
    a = BicomplexMatrix(
        ComplexMatrix([[0.0, 1.0], [0.0, 0.0]], FLOAT), ComplexMatrix.diagonal([1.0, 2.0], FLOAT)
    )
    with pytest.raises(NotSelfAdjoint):
        selfadjoint_diagonalize(a)


def test_enumerate_diagonalizations_example_one():
    a = _example_one_float()
    out = enumerate_diagonalizations(a)
    assert len(out) == 2
    for data in out:
        assert max(data.residuals["reconstruction"]) < 1e-9


def test_enumerate_diagonalizations_1x1():
    a = BicomplexMatrix(
        ComplexMatrix([[2.0]], FLOAT), ComplexMatrix([[5.0]], FLOAT)
    )
    assert len(enumerate_diagonalizations(a)) == 1


def test_enumerate_diagonalizations_3x3_all_verify():
    rng = np.random.default_rng(11)
    found = 0
    while found < 3:
        a = random_selfadjoint_bicomplex(rng, 3)
        try:
            out = enumerate_diagonalizations(a)
        except DegenerateSpectrum:
            continue
        found += 1
        assert len(out) == 6
        for data in out:
            assert max(data.residuals["reconstruction"]) < 1e-9
            assert max(data.residuals["unitarity"]) < 1e-9


def test_enumerate_rejects_degenerate_spectrum():
    a = BicomplexMatrix(
        ComplexMatrix.diagonal([1.0, 1.0], FLOAT), ComplexMatrix.diagonal([1.0, 2.0], FLOAT)
    )
    with pytest.raises(DegenerateSpectrum):
        enumerate_diagonalizations(a)


def test_pairing_multiset_invariance():
    # across pairings, the multiset of (d1, d2) diagonal pairs is exactly
    # the component-1 spectrum crossed against permutations of component-2
    rng = np.random.default_rng(13)
    a = random_selfadjoint_bicomplex(rng, 3)
    out = enumerate_diagonalizations(a)
    base1 = sorted(p[0] for p in out[0].diagonal_pairs())
    base2 = sorted(p[1] for p in out[0].diagonal_pairs())
    for data in out:
        assert sorted(p[0] for p in data.diagonal_pairs()) == pytest.approx(base1)
        assert sorted(p[1] for p in data.diagonal_pairs()) == pytest.approx(base2)
    assert len({tuple(data.pairing) for data in out}) == 6


def test_eigenvalue_reality():
    rng = np.random.default_rng(17)
    a = random_selfadjoint_bicomplex(rng, 5)
    data = selfadjoint_diagonalize(a)
    for i in range(5):
        assert abs(complex(data.d.m1[i, i]).imag) < 1e-12
        assert abs(complex(data.d.m2[i, i]).imag) < 1e-12


def test_exact_input_accepted_via_float_view():
    # exact self-adjoint matrices go through the float path transparently
    g = GaussianRational
    m = ComplexMatrix([[g(2), g(0, 1)], [g(0, -1), g(3)]], "exact")
    a = BicomplexMatrix(m, m)
    assert adjoint(a) == a
    data = selfadjoint_diagonalize(a)
    assert max(data.residuals["reconstruction"]) < 1e-9
