"""Scalar arithmetic, hyperbolic norms, and the partial order."""

import random
from fractions import Fraction

import pytest

from bicomplex import (
    BicomplexScalar,
    EmptySet,
    GaussianRational,
    HyperbolicValue,
    NotInvertible,
    Ordering,
    UnsupportedOnExactBackend,
    ball_contains,
    hyperbolic_inf,
    hyperbolic_norm,
    invert,
    nth_root,
)
from bicomplex.scalars import FLOAT

from helpers import rand_scalar

E = BicomplexScalar.e()
ED = BicomplexScalar.e_dagger()
ONE = BicomplexScalar.one()
ZERO = BicomplexScalar.zero()


def test_idempotent_identities():
    assert E * ED == ZERO
    assert ED * E == ZERO
    assert E * E == E
    assert ED * ED == ED
    assert E + ED == ONE


def test_euclidean_round_trip_exact():
    rng = random.Random(7)
    for _ in range(200):
        z1 = GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 7)), rng.randint(-9, 9))
        z2 = GaussianRational(rng.randint(-9, 9), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        z = BicomplexScalar.from_euclidean(z1, z2)
        w1, w2 = z.to_euclidean()
        assert w1 == z1 and w2 == z2


def test_known_idempotent_components():
    # z = (3+4i) + j(1-2i): c1 = z1 - i z2, c2 = z1 + i z2
    z = BicomplexScalar.from_euclidean(GaussianRational(3, 4), GaussianRational(1, -2))
    assert z.c1 == GaussianRational(1, 3)
    assert z.c2 == GaussianRational(5, 5)


def test_product_matches_euclidean_formula():
    # z*w = (z1 w1 - z2 w2) + j (z1 w2 + w1 z2), checked against the
    # componentwise product through the coordinate view
    rng = random.Random(3)
    i = GaussianRational(0, 1)
    for _ in range(300):
        a, b = rand_scalar(rng), rand_scalar(rng)
        z1, z2 = a.to_euclidean()
        w1, w2 = b.to_euclidean()
        direct = BicomplexScalar.from_euclidean(z1 * w1 - z2 * w2, z1 * w2 + w1 * z2)
        assert a * b == direct
    # concrete instance: (1 + j i) and (1 - j i) are zero divisors whose
    # product vanishes (c2 resp. c1 components are zero)
    a = BicomplexScalar.from_euclidean(GaussianRational(1), i)
    b = BicomplexScalar.from_euclidean(GaussianRational(1), -i)
    assert a.c2.is_zero() and b.c1.is_zero()
    assert (a * b).is_zero()


def test_ring_laws_random_exact():
    rng = random.Random(11)
    for _ in range(300):
        a, b, c = (rand_scalar(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_invert_identity_and_componentwise():
    assert invert(ONE) == ONE
    s = BicomplexScalar.from_idempotent(2, 4)
    assert invert(s) == BicomplexScalar.from_idempotent(Fraction(1, 2), Fraction(1, 4))
    assert s * invert(s) == ONE


def test_invert_noninvertible_reports_components():
    with pytest.raises(NotInvertible) as info:
        invert(E)
    assert info.value.components == (2,)
    with pytest.raises(NotInvertible) as info:
        invert(ED)
    assert info.value.components == (1,)
    with pytest.raises(NotInvertible) as info:
        invert(ZERO)
    assert info.value.components == (1, 2)


def test_noninvertibility_characterization():
    rng = random.Random(5)
    for _ in range(200):
        s = rand_scalar(rng)
        should_fail = s.c1.is_zero() or s.c2.is_zero()
        if should_fail:
            with pytest.raises(NotInvertible):
                invert(s)
        else:
            assert s * invert(s) == ONE


def test_is_complex_iff_components_equal():
    c = GaussianRational(2, -7)
    assert BicomplexScalar(c, c).is_complex()
    assert not BicomplexScalar(c, c + GaussianRational(1)).is_complex()


def test_conjugation_fixed_points_and_involution():
    assert E.conjugate() == E
    assert ED.conjugate() == ED
    five = BicomplexScalar.from_real(5)
    assert five.conjugate() == five
    rng = random.Random(13)
    for _ in range(200):
        a, b = rand_scalar(rng), rand_scalar(rng)
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_conjugate_euclidean_view():
    # conj(z) = conj(z1) - j conj(z2)
    rng = random.Random(17)
    for _ in range(100):
        a = rand_scalar(rng)
        z1, z2 = a.to_euclidean()
        expected = BicomplexScalar.from_euclidean(z1.conjugate(), -z2.conjugate())
        assert a.conjugate() == expected


def test_self_product_gives_squared_norm():
    rng = random.Random(19)
    for _ in range(100):
        a = rand_scalar(rng)
        p = a * a.conjugate()
        assert p.c1 == GaussianRational(a.c1.abs2())
        assert p.c2 == GaussianRational(a.c2.abs2())


def test_hyperbolic_norm_basics():
    assert hyperbolic_norm(ZERO) == HyperbolicValue(Fraction(0), Fraction(0), squared=True)
    assert hyperbolic_norm(E) == HyperbolicValue(Fraction(1), Fraction(0), squared=True)
    f = BicomplexScalar.e(FLOAT)
    assert hyperbolic_norm(f) == HyperbolicValue(1.0, 0.0)


def test_hyperbolic_norm_multiplicative_exact():
    # squared moduli compared exactly, avoiding irrational square roots
    rng = random.Random(23)
    for _ in range(1000):
        a, b = rand_scalar(rng), rand_scalar(rng)
        assert hyperbolic_norm(a * b) == hyperbolic_norm(a) * hyperbolic_norm(b)


def test_nth_root_unity_and_componentwise():
    one = BicomplexScalar.one(FLOAT)
    assert nth_root(one, 2, 0, 0).approx_eq(one)
    s = BicomplexScalar.from_idempotent(4.0, 9.0, FLOAT)
    assert nth_root(s, 2, 0, 0).approx_eq(BicomplexScalar.from_idempotent(2.0, 3.0, FLOAT))


def test_nth_root_branches():
    # branches of sqrt(-1) per component: branch 0 -> i, branch 1 -> -i
    s = BicomplexScalar.from_idempotent(-1.0, -1.0, FLOAT)
    r = nth_root(s, 2, 0, 1)
    assert r.approx_eq(BicomplexScalar.from_idempotent(1j, -1j, FLOAT), 1e-12)
    assert (r * r).approx_eq(s, 1e-12)
    # every branch pair squares back to the input
    for b1 in range(2):
        for b2 in range(2):
            r = nth_root(s, 2, b1, b2)
            assert (r * r).approx_eq(s, 1e-12)


def test_nth_root_rejects_exact_backend():
    with pytest.raises(UnsupportedOnExactBackend):
        nth_root(BicomplexScalar.from_idempotent(4, 9), 2, 0, 0)


def test_partial_order_three_valued():
    a = HyperbolicValue(1.0, 0.0)
    b = HyperbolicValue(0.0, 1.0)
    assert a.compare(b) is Ordering.INCOMPARABLE
    assert not a.strictly_less(b) and not b.strictly_less(a)
    lo = HyperbolicValue(1.0, 1.0)
    hi = HyperbolicValue(2.0, 3.0)
    assert lo.compare(hi) is Ordering.LESS
    assert hi.compare(lo) is Ordering.GREATER
    assert lo.compare(HyperbolicValue(1.0, 1.0)) is Ordering.EQUAL


def test_partial_order_irreflexive_transitive():
    rng = random.Random(29)
    vals = [
        HyperbolicValue(Fraction(rng.randint(0, 6)), Fraction(rng.randint(0, 6)))
        for _ in range(40)
    ]
    for v in vals:
        assert not v.strictly_less(v)
    for a in vals:
        for b in vals:
            for c in vals:
                if a.strictly_less(b) and b.strictly_less(c):
                    assert a.strictly_less(c)


def test_hyperbolic_value_rejects_negative():
    with pytest.raises(ValueError):
        HyperbolicValue(-1.0, 0.0)


def test_ball_membership():
    r11 = HyperbolicValue(1.0, 1.0)
    zero_f = BicomplexScalar.zero(FLOAT)
    assert ball_contains(zero_f, r11, zero_f)
    assert not ball_contains(zero_f, r11, BicomplexScalar.e(FLOAT))
    assert ball_contains(
        zero_f, HyperbolicValue(2.0, 1.0), BicomplexScalar.from_idempotent(1.0, 0.5, FLOAT)
    )
    with pytest.raises(ValueError):
        ball_contains(zero_f, HyperbolicValue(0.0, 1.0), zero_f)


def test_ball_membership_exact_squared_comparison():
    # exact norms are squared; radii given unsquared must still compare right
    center = BicomplexScalar.zero()
    point = BicomplexScalar.from_idempotent(GaussianRational(1), GaussianRational(2))
    assert ball_contains(center, HyperbolicValue(Fraction(2), Fraction(3)), point)
    assert not ball_contains(center, HyperbolicValue(Fraction(1), Fraction(3)), point)


def test_hyperbolic_inf():
    assert hyperbolic_inf([HyperbolicValue(1.0, 2.0)]) == HyperbolicValue(1.0, 2.0)
    got = hyperbolic_inf([HyperbolicValue(1.0, 5.0), HyperbolicValue(3.0, 2.0)])
    assert got == HyperbolicValue(1.0, 2.0)  # not attained by one element
    with pytest.raises(EmptySet):
        hyperbolic_inf([])


def test_hyperbolic_inf_brute_force():
    rng = random.Random(31)
    rs = [Fraction(rng.randint(0, 50), rng.randint(1, 9)) for _ in range(25)]
    vals = [HyperbolicValue(r, r) for r in rs]
    got = hyperbolic_inf(vals)
    assert got.h1 == min(rs) and got.h2 == min(rs)


def test_backend_mismatch_rejected():
    from bicomplex import BackendMismatch

    with pytest.raises(BackendMismatch):
        BicomplexScalar.one() + BicomplexScalar.one(FLOAT)


def test_pow_componentwise():
    rng = random.Random(37)
    for _ in range(50):
        a = rand_scalar(rng)
        assert a ** 3 == a * a * a
        assert a ** 0 == ONE
