"""End-to-end worked examples used by the CLI and the acceptance tests.

Example one: the self-adjoint 2x2 matrix [[0, z], [conj(z), 0]] for a
noncomplex z.  It carries two distinct hyperbolic eigenvalue pairings,
(+|z|_h, -|z|_h) and (|c1| e - |c2| e†, -|c1| e + |c2| e†), hence two
distinct unitary diagonalizations (2! pairings).

Example two: the bicomplex Jordan-form matrix 0 e + [[0,1],[0,0]] e†,
whose invariant-subspace diagram is the 4 x 3 = 12 node product of the
component lattices.
"""

from __future__ import annotations

import math
import random
from typing import Optional

from .jordan import bicomplex_jordan
from .lattice import bicomplex_lattice, is_invariant, verify_lattice
from .matrices import (
    BicomplexMatrix,
    ComplexMatrix,
    adjoint,
    is_eigenvalue,
)
from .scalars import EXACT, FLOAT, BicomplexScalar, GaussianRational
from .spectral import enumerate_diagonalizations, selfadjoint_diagonalize


def example_one_scalar() -> BicomplexScalar:
    """z = (3+4i) + j(1-2i): noncomplex, with distinct component moduli."""
    return BicomplexScalar.from_euclidean(
        GaussianRational(3, 4), GaussianRational(1, -2), EXACT
    )


def random_noncomplex_scalar(rng: random.Random) -> BicomplexScalar:
    """Random exact z with c1 != c2 and distinct nonzero component moduli."""
    while True:
        z = BicomplexScalar.from_idempotent(
            GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)),
            GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)),
            EXACT,
        )
        if z.is_complex() or not z.is_invertible():
            continue
        if z.c1.abs2() != z.c2.abs2():
            return z


def example_one_matrix(z: BicomplexScalar) -> BicomplexMatrix:
    zero = BicomplexScalar.zero(z.backend)
    return BicomplexMatrix.from_scalar_entries([[zero, z], [z.conjugate(), zero]])


def example_one_report(
    z: Optional[BicomplexScalar] = None,
    det_tol: float = 1e-10,
    residual_tol: float = 1e-9,
) -> dict:
    """Reproduce the 2x2 self-adjoint example: both eigenvalue pairings,
    both diagonalizations, and the 2! enumeration count."""
    z = example_one_scalar() if z is None else z
    a = example_one_matrix(z).to_float()
    m1 = math.sqrt(float(z.c1.abs2()))
    m2 = math.sqrt(float(z.c2.abs2()))

    pairs = {
        "norm_pair": [
            BicomplexScalar.from_idempotent(m1, m2, FLOAT),
            BicomplexScalar.from_idempotent(-m1, -m2, FLOAT),
        ],
        "mixed_pair": [
            BicomplexScalar.from_idempotent(m1, -m2, FLOAT),
            BicomplexScalar.from_idempotent(-m1, m2, FLOAT),
        ],
    }
    eig_checks = {
        name: all(is_eigenvalue(a, lam, det_tol) for lam in lams)
        for name, lams in pairs.items()
    }

    diag_identity = selfadjoint_diagonalize(a, "identity")
    diag_swapped = selfadjoint_diagonalize(a, (1, 0))
    all_pairings = enumerate_diagonalizations(a)

    def residual_ok(data):
        return all(r <= residual_tol for r in data.residuals["reconstruction"]) and all(
            r <= residual_tol for r in data.residuals["unitarity"]
        )

    report = {
        "z_idempotent_moduli": [m1, m2],
        "self_adjoint": adjoint(a).approx_eq(a, 1e-12),
        "eigenvalue_pairs_verified": eig_checks,
        "diagonalizations": {
            "identity": {
                "diagonal": diag_identity.diagonal_pairs(),
                "residuals": diag_identity.residuals,
                "ok": residual_ok(diag_identity),
            },
            "swapped": {
                "diagonal": diag_swapped.diagonal_pairs(),
                "residuals": diag_swapped.residuals,
                "ok": residual_ok(diag_swapped),
            },
        },
        "enumeration_count": len(all_pairings),
        "expected_count": 2,
    }
    report["passed"] = (
        report["self_adjoint"]
        and all(eig_checks.values())
        and report["diagonalizations"]["identity"]["ok"]
        and report["diagonalizations"]["swapped"]["ok"]
        and report["enumeration_count"] == 2
    )
    return report


def example_two_matrix() -> BicomplexMatrix:
    zero = ComplexMatrix.zeros(2, 2, EXACT)
    shift = ComplexMatrix([[0, 1], [0, 0]], EXACT)
    return BicomplexMatrix(zero, shift)


def example_two_report() -> dict:
    """Reproduce the invariant-subspace lattice example: the matrix is its
    own Jordan form and its lattice is the 12-node product diagram."""
    a = example_two_matrix()
    jdata = bicomplex_jordan(a)
    lat = bicomplex_lattice(a)
    structure = verify_lattice(lat, a)
    report = {
        "jordan_equals_input": jdata.j == a,
        "superdiagonal_alphabet": jdata.superdiagonal_alphabet(),
        "component_node_counts": list(lat.metadata["component_sizes"]),
        "node_count": len(lat.nodes),
        "expected_node_count": 12,
        "cover_count": len(lat.covers),
        "structure_checks": structure,
        "all_nodes_invariant": all(is_invariant(a, n.subspace) for n in lat.nodes),
    }
    report["passed"] = (
        report["jordan_equals_input"]
        and report["node_count"] == 12
        and report["all_nodes_invariant"]
        and all(structure.values())
    )
    return report
