"""Exact Jordan forms: characteristic polynomials, root extraction over the
Gaussian rationals, chain construction, and bicomplex assembly."""

import random
from fractions import Fraction

import pytest

from bicomplex import (
    BicomplexMatrix,
    ComplexMatrix,
    DoesNotSplit,
    GaussianRational,
    Poly,
    bicomplex_jordan,
    char_poly,
    complex_jordan,
    enumerate_pairings,
    split_eigenvalues,
)
from bicomplex.matrices import exact_inverse
from bicomplex.scalars import EXACT

from helpers import (
    charpoly_oracle,
    rand_complex_matrix,
    rand_invertible_complex,
    random_jordan_complex,
)


def gr(re, im=0):
    return GaussianRational(re, im)


def test_char_poly_known_cases():
    assert char_poly(ComplexMatrix.zeros(2, 2)) == Poly([0, 0, 1])  # x^2
    assert char_poly(ComplexMatrix.diagonal([1, 2])) == Poly([2, -3, 1])  # x^2-3x+2


def test_char_poly_matches_cofactor_oracle():
    rng = random.Random(41)
    for _ in range(20):
        m = rand_complex_matrix(rng, 4, span=2)
        assert char_poly(m) == charpoly_oracle(m)


def test_split_eigenvalues_simple():
    assert split_eigenvalues(Poly([2, -3, 1])) == [(gr(1), 1), (gr(2), 1)]
    assert split_eigenvalues(Poly([0, 0, 1])) == [(gr(0), 2)]


def test_split_eigenvalues_gaussian_roots():
    # x^2 + 1 = (x - i)(x + i)
    roots = split_eigenvalues(Poly([1, 0, 1]))
    assert roots == [(gr(0, -1), 1), (gr(0, 1), 1)]
    for r, _ in roots:
        assert (r * r + gr(1)).is_zero()


def test_split_eigenvalues_rational_roots():
    # (x - 1/2)(x - 1/3) = x^2 - 5/6 x + 1/6
    p = Poly([Fraction(1, 6), Fraction(-5, 6), 1])
    assert split_eigenvalues(p) == [(gr(Fraction(1, 3)), 1), (gr(Fraction(1, 2)), 1)]


def test_split_eigenvalues_does_not_split():
    # x^2 - 2 is irreducible over the Gaussian rationals
    with pytest.raises(DoesNotSplit) as info:
        split_eigenvalues(Poly([-2, 0, 1]))
    assert len(info.value.remainder) == 3
    # mixed case: (x - 1)(x^2 - 2) splits off only the rational root
    with pytest.raises(DoesNotSplit):
        split_eigenvalues(Poly([2, -2, -1, 1]))


def test_complex_jordan_diagonal():
    jd = complex_jordan(ComplexMatrix.diagonal([3, 3]))
    assert jd.blocks[gr(3)] == (1, 1)
    assert jd.jordan == ComplexMatrix.diagonal([3, 3])


def test_complex_jordan_nilpotent_block():
    m = ComplexMatrix([[0, 1], [0, 0]], EXACT)
    jd = complex_jordan(m)
    assert jd.blocks[gr(0)] == (2,)
    assert jd.jordan == m  # the shift is its own Jordan form
    assert m @ jd.transition == jd.transition @ jd.jordan


_random_jordan_matrix = random_jordan_complex


def test_complex_jordan_construct_then_recover():
    rng = random.Random(43)
    for _ in range(25):
        n = rng.randint(2, 4)
        a, blocks = _random_jordan_matrix(rng, n)
        jd = complex_jordan(a)
        assert jd.blocks == blocks
        assert a @ jd.transition == jd.transition @ jd.jordan


def test_complex_jordan_similarity_invariance():
    rng = random.Random(45)
    for _ in range(10):
        a, _ = _random_jordan_matrix(rng, 3)
        q = rand_invertible_complex(rng, 3)
        b = q @ a @ exact_inverse(q)
        assert complex_jordan(a).blocks == complex_jordan(b).blocks


def test_chain_structure():
    # within each block: (A - lam I) v_k = v_{k-1}, (A - lam I) v_1 = 0
    rng = random.Random(47)
    a, _ = _random_jordan_matrix(rng, 4)
    jd = complex_jordan(a)
    n = a.rows
    for lam, chain in jd.chains:
        nmat = a - ComplexMatrix.identity(n, EXACT).scale(lam)
        prev = None
        for v in chain:
            image = nmat.apply(list(v))
            if prev is None:
                assert all(c.is_zero() for c in image)
            else:
                assert list(image) == list(prev)
            prev = v


def test_rank_sequence_consistency():
    # block multiset from kernel dims must reproduce those dims from J:
    # dim ker (J - lam I)^k == sum over lam's blocks of min(size, k)
    from bicomplex.matrices import exact_kernel

    rng = random.Random(49)
    for _ in range(10):
        a, _ = _random_jordan_matrix(rng, 4)
        jd = complex_jordan(a)
        n = a.rows
        for lam, sizes in jd.blocks.items():
            nmat = jd.jordan - ComplexMatrix.identity(n, EXACT).scale(lam)
            power = ComplexMatrix.identity(n, EXACT)
            for k in range(1, max(sizes) + 1):
                power = power @ nmat
                assert len(exact_kernel(power)) == sum(min(s, k) for s in sizes)


def test_bicomplex_jordan_worked_example():
    a = BicomplexMatrix(ComplexMatrix.zeros(2, 2), ComplexMatrix([[0, 1], [0, 0]], EXACT))
    data = bicomplex_jordan(a)
    assert data.j == a
    assert data.superdiagonal_alphabet() == ["e†"]
    assert data.reconstruct() == a


def test_bicomplex_jordan_complex_embedding_reduces():
    rng = random.Random(51)
    m, _ = _random_jordan_matrix(rng, 3)
    a = BicomplexMatrix(m, m)
    data = bicomplex_jordan(a)
    assert set(data.superdiagonal_alphabet()) <= {"0", "1"}
    assert data.j.m1 == data.j.m2 == complex_jordan(m).jordan
    assert data.reconstruct() == a


def test_bicomplex_jordan_exact_reconstruction():
    rng = random.Random(53)
    for _ in range(10):
        m1, _ = _random_jordan_matrix(rng, 3)
        m2, _ = _random_jordan_matrix(rng, 3)
        a = BicomplexMatrix(m1, m2)
        data = bicomplex_jordan(a)
        assert data.reconstruct() == a
        assert set(data.superdiagonal_alphabet()) <= {"0", "1", "e", "e†"}


def test_bicomplex_jordan_diagonality_criterion():
    diag = BicomplexMatrix(ComplexMatrix.diagonal([1, 2]), ComplexMatrix.diagonal([5, 5]))
    assert bicomplex_jordan(diag).is_diagonal()
    mixed = BicomplexMatrix(
        ComplexMatrix.diagonal([1, 2]), ComplexMatrix([[0, 1], [0, 0]], EXACT)
    )
    assert not bicomplex_jordan(mixed).is_diagonal()


def test_enumerate_pairings_non_uniqueness():
    a = BicomplexMatrix(
        ComplexMatrix.diagonal([1, 2]), ComplexMatrix.diagonal([3, 4])
    )
    data = bicomplex_jordan(a)
    variants = list(enumerate_pairings(data))
    assert len(variants) == 4  # 2 block orders per component
    seen = set()
    for v in variants:
        assert v.reconstruct() == a
        seen.add((tuple(v.comp1.block_sequence()), tuple(v.comp2.block_sequence())))
    assert len(seen) == 4


def test_enumerate_pairings_identical_blocks_collapse():
    a = BicomplexMatrix(ComplexMatrix.diagonal([3, 3]), ComplexMatrix.diagonal([3, 3]))
    variants = list(enumerate_pairings(bicomplex_jordan(a)))
    assert len(variants) == 1  # permuting identical blocks changes nothing


def test_does_not_split_propagates_with_component():
    bad = ComplexMatrix([[0, 1], [2, 0]], EXACT)  # char poly x^2 - 2
    good = ComplexMatrix.diagonal([1, 2])
    with pytest.raises(DoesNotSplit) as info:
        bicomplex_jordan(BicomplexMatrix(bad, good))
    assert info.value.component == 1
    with pytest.raises(DoesNotSplit) as info:
        bicomplex_jordan(BicomplexMatrix(good, bad))
    assert info.value.component == 2
