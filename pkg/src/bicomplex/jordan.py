"""Exact Jordan canonical forms over the Gaussian rationals, per idempotent
component, assembled into the bicomplex Jordan form.

The exact path is deliberate: Jordan structure is discontinuous in the
matrix entries, so a floating Jordan form is ill-posed.  Floating-point
users get the ``spectral`` module (well-posed for self-adjoint matrices).

Eigenvalue extraction is bounded by the Gaussian rationals: the monic
characteristic polynomial is rescaled to a monic polynomial over the
Gaussian integers, whose rational roots are Gaussian-integer divisors of
its constant term.  Anything past that boundary raises ``DoesNotSplit``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Sequence, Tuple

from .errors import ConsistencyFailure, DoesNotSplit, NotSquare
from .matrices import (
    BicomplexMatrix,
    ComplexMatrix,
    RowSpan,
    exact_inverse,
    exact_kernel,
)
from .scalars import EXACT, BicomplexScalar, GaussianRational

Vector = Tuple[GaussianRational, ...]


class Poly:
    """Dense polynomial over the Gaussian rationals, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[GaussianRational]):
        cs = [c if isinstance(c, GaussianRational) else GaussianRational(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0].is_zero()

    def is_monic(self) -> bool:
        return self.coeffs[-1] == GaussianRational(1)

    def __call__(self, x: GaussianRational) -> GaussianRational:
        acc = GaussianRational(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        z = GaussianRational(0)
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + Poly([-c for c in other.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        z = GaussianRational(0)
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def deflate(self, root: GaussianRational) -> Tuple["Poly", GaussianRational]:
        """Synthetic division by (x - root): returns (quotient, remainder)."""
        acc = GaussianRational(0)
        out = []
        for c in reversed(self.coeffs):  # Horner, high to low
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        out.reverse()
        return Poly(out or [GaussianRational(0)]), rem

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly([" + ", ".join(str(c) for c in self.coeffs) + "])"


def char_poly(a: ComplexMatrix) -> Poly:
    """Monic characteristic polynomial det(xI - A), exactly, by the
    Faddeev-LeVerrier trace recurrence."""
    if not a.is_square():
        raise NotSquare("characteristic polynomial needs a square matrix")
    if a.backend != EXACT:
        raise ValueError("char_poly is exact-only; use the spectral module for floats")
    n = a.rows
    coeffs = [GaussianRational(0)] * (n + 1)
    coeffs[n] = GaussianRational(1)
    m = ComplexMatrix.zeros(n, n, EXACT)
    ident = ComplexMatrix.identity(n, EXACT)
    for k in range(1, n + 1):
        m = (a @ m) + ident.scale(coeffs[n - k + 1])
        am = a @ m
        coeffs[n - k] = -(am.trace() * GaussianRational(Fraction(1, k)))
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# Gaussian-integer arithmetic for root candidates
# ---------------------------------------------------------------------------

GInt = Tuple[int, int]  # a + b*i with integer a, b

_UNITS: Tuple[GInt, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _gnorm(x: GInt) -> int:
    return x[0] * x[0] + x[1] * x[1]


def _gmul(x: GInt, y: GInt) -> GInt:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gdiv_exact(x: GInt, y: GInt):
    """x / y if it is a Gaussian integer, else None."""
    n = _gnorm(y)
    tr = x[0] * y[0] + x[1] * y[1]
    ti = x[1] * y[0] - x[0] * y[1]
    if tr % n or ti % n:
        return None
    return (tr // n, ti // n)


def _gmod(x: GInt, y: GInt) -> GInt:
    n = _gnorm(y)
    tr = x[0] * y[0] + x[1] * y[1]
    ti = x[1] * y[0] - x[0] * y[1]
    q = (round(tr / n), round(ti / n))
    return (x[0] - (q[0] * y[0] - q[1] * y[1]), x[1] - (q[0] * y[1] + q[1] * y[0]))


def _ggcd(x: GInt, y: GInt) -> GInt:
    while y != (0, 0):
        x, y = y, _gmod(x, y)
    return x


def _gaussian_prime_factors(g: GInt) -> List[Tuple[GInt, int]]:
    """Factor a nonzero Gaussian integer into Gaussian primes (up to a
    unit), using the rational prime factorization of its norm."""
    from sympy import factorint
    from sympy.ntheory.residue_ntheory import sqrt_mod

    rem = g
    factors: List[Tuple[GInt, int]] = []

    def divide_out(pi: GInt):
        nonlocal rem
        e = 0
        while True:
            q = _gdiv_exact(rem, pi)
            if q is None:
                break
            rem = q
            e += 1
        if e:
            factors.append((pi, e))

    for p in sorted(factorint(_gnorm(g))):
        if p == 2:
            divide_out((1, 1))
        elif p % 4 == 3:
            divide_out((p, 0))
        else:
            c = int(sqrt_mod(p - 1, p))
            pi = _ggcd((p, 0), (c, 1))
            divide_out(pi)
            divide_out((pi[0], -pi[1]))
    if _gnorm(rem) != 1:
        raise ConsistencyFailure(f"gaussian factorization left non-unit {rem}")
    return factors


def _gaussian_divisors(g: GInt) -> List[GInt]:
    """All divisors of g up to units."""
    divs = [(1, 0)]
    for pi, e in _gaussian_prime_factors(g):
        power = (1, 0)
        powers = [power]
        for _ in range(e):
            power = _gmul(power, pi)
            powers.append(power)
        divs = [_gmul(d, pk) for d in divs for pk in powers]
    return divs


def _root_candidates(p: Poly) -> List[GaussianRational]:
    """Gaussian-rational root candidates for a monic polynomial.

    Rescale x -> y/m so the polynomial becomes monic over the Gaussian
    integers; its rational roots are then Gaussian integers dividing the
    constant term, and map back as y/m.
    """
    if p.degree == 1:
        return [-p.coeffs[0]]
    denoms = []
    for c in p.coeffs:
        denoms.append(c.re.denominator)
        denoms.append(c.im.denominator)
    m = lcm(*denoms)
    n = p.degree
    b0 = p.coeffs[0] * GaussianRational(m) ** n
    g = (int(b0.re), int(b0.im))
    seen = set()
    out = []
    for d in _gaussian_divisors(g):
        for u in _UNITS:
            cand = _gmul(d, u)
            if cand in seen:
                continue
            seen.add(cand)
            out.append(GaussianRational(Fraction(cand[0], m), Fraction(cand[1], m)))
    return out


def split_eigenvalues(p: Poly) -> List[Tuple[GaussianRational, int]]:
    """Full factorization of a monic polynomial over the Gaussian
    rationals: returns (root, multiplicity) pairs sorted by (re, im).

    Raises DoesNotSplit with the remaining factor when an irreducible
    factor of degree >= 2 survives; that is the documented boundary of
    the exact path.
    """
    if not p.is_monic():
        lead = p.coeffs[-1]
        if lead.is_zero():
            raise ValueError("zero polynomial has no eigenvalue factorization")
        p = Poly([c / lead for c in p.coeffs])
    roots: List[Tuple[GaussianRational, int]] = []
    work = p
    # strip roots at zero first so the constant term is nonzero
    zero = GaussianRational(0)
    zmult = 0
    while work.degree > 0 and work.coeffs[0].is_zero():
        work = Poly(work.coeffs[1:])
        zmult += 1
    if zmult:
        roots.append((zero, zmult))
    if work.degree > 0:
        for cand in _root_candidates(work):
            if work.degree == 0:
                break
            mult = 0
            while work.degree > 0:
                q, rem = work.deflate(cand)
                if not rem.is_zero():
                    break
                work = q
                mult += 1
            if mult:
                roots.append((cand, mult))
    if work.degree > 0:
        raise DoesNotSplit(work.coeffs)
    roots.sort(key=lambda t: (t[0].re, t[0].im))
    return roots


# ---------------------------------------------------------------------------
# Jordan chains
# ---------------------------------------------------------------------------

@dataclass
class ComplexJordanData:
    """Jordan decomposition of one idempotent component: A = P J P^-1."""

    eigenvalues: List[GaussianRational]
    blocks: Dict[GaussianRational, Tuple[int, ...]]
    chains: List[Tuple[GaussianRational, Tuple[Vector, ...]]]
    transition: ComplexMatrix
    jordan: ComplexMatrix

    @property
    def n(self) -> int:
        return self.transition.rows

    def block_sequence(self) -> Tuple[Tuple[GaussianRational, int], ...]:
        """(eigenvalue, size) per chain, in column order."""
        return tuple((lam, len(chain)) for lam, chain in self.chains)

    def is_diagonal(self) -> bool:
        return all(size == 1 for _, sizes in self.blocks.items() for size in sizes)


def _assemble_from_chains(
    chains: List[Tuple[GaussianRational, Tuple[Vector, ...]]], n: int
) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Build (P, J) from ordered chains; chain vectors are bottom-first,
    so within a block A v_k = lam v_k + v_{k-1}."""
    zero = GaussianRational(0)
    one = GaussianRational(1)
    cols: List[Vector] = []
    jrows = [[zero] * n for _ in range(n)]
    pos = 0
    for lam, chain in chains:
        for k, vec in enumerate(chain):
            cols.append(vec)
            jrows[pos + k][pos + k] = lam
            if k + 1 < len(chain):
                jrows[pos + k][pos + k + 1] = one
        pos += len(chain)
    p = ComplexMatrix([[cols[j][i] for j in range(n)] for i in range(n)], EXACT)
    return p, ComplexMatrix(jrows, EXACT)


def complex_jordan(a: ComplexMatrix) -> ComplexJordanData:
    """Exact complex Jordan form via kernel towers of (A - lam I)^k.

    Block sizes come from the kernel dimension sequence; chains are built
    top-down (a new chain of height k starts at a vector of ker N^k that
    is independent of ker N^(k-1) and of the taller chains' height-k
    vectors).  The result is verified structurally before returning.
    """
    if not a.is_square():
        raise NotSquare("jordan form needs a square matrix")
    n = a.rows
    roots = split_eigenvalues(char_poly(a))
    chains_out: List[Tuple[GaussianRational, Tuple[Vector, ...]]] = []
    blocks: Dict[GaussianRational, Tuple[int, ...]] = {}
    for lam, mult in roots:
        nmat = a - ComplexMatrix.identity(n, EXACT).scale(lam)
        kernels: List[List[Vector]] = [[]]
        power = ComplexMatrix.identity(n, EXACT)
        while len(kernels[-1]) < mult:
            power = power @ nmat
            kernels.append([tuple(v) for v in exact_kernel(power)])
        height = len(kernels) - 1
        dims = [len(k) for k in kernels]
        lam_chains: List[Tuple[Vector, ...]] = []
        for k in range(height, 0, -1):
            span = RowSpan(n)
            for v in kernels[k - 1]:
                span.add(v)
            for chain in lam_chains:  # taller chains' height-k vectors
                span.add(chain[k - 1])
            for v in kernels[k]:
                if span.dim == dims[k]:
                    break
                if span.add(v):
                    chain = [v]
                    w = v
                    for _ in range(k - 1):
                        w = tuple(nmat.apply(list(w)))
                        chain.append(w)
                    chain.reverse()  # eigenvector first
                    lam_chains.append(tuple(chain))
        lam_chains.sort(key=len, reverse=True)
        blocks[lam] = tuple(len(c) for c in lam_chains)
        chains_out.extend((lam, c) for c in lam_chains)
    p, j = _assemble_from_chains(chains_out, n)
    if a @ p != p @ j:
        raise ConsistencyFailure("jordan verification failed: A P != P J")
    return ComplexJordanData(
        eigenvalues=[lam for lam, _ in roots],
        blocks=blocks,
        chains=chains_out,
        transition=p,
        jordan=j,
    )


# ---------------------------------------------------------------------------
# bicomplex assembly
# ---------------------------------------------------------------------------

SUPERDIAGONAL_SYMBOLS = {
    (False, False): "0",
    (True, True): "1",
    (True, False): "e",
    (False, True): "e†",
}


@dataclass
class BicomplexJordanData:
    """Bicomplex Jordan form A = P J P^-1 with P, J assembled per component."""

    comp1: ComplexJordanData
    comp2: ComplexJordanData
    p: BicomplexMatrix
    j: BicomplexMatrix

    def superdiagonal_alphabet(self) -> List[str]:
        """Symbols occurring on the superdiagonal of J, among 0/1/e/e†."""
        seen = []
        n = self.j.rows
        one = GaussianRational(1)
        zero = GaussianRational(0)
        for i in range(n - 1):
            e1 = self.j.m1[i, i + 1]
            e2 = self.j.m2[i, i + 1]
            if e1 not in (one, zero) or e2 not in (one, zero):
                raise ConsistencyFailure("superdiagonal entry outside {0,1,e,e†}")
            sym = SUPERDIAGONAL_SYMBOLS[(e1 == one, e2 == one)]
            if sym not in seen:
                seen.append(sym)
        return seen

    def is_diagonal(self) -> bool:
        return self.comp1.is_diagonal() and self.comp2.is_diagonal()

    def reconstruct(self) -> BicomplexMatrix:
        pinv = BicomplexMatrix(
            exact_inverse(self.p.m1), exact_inverse(self.p.m2)
        )
        return self.p @ self.j @ pinv

    def eigenvalue_pairings(self) -> List[BicomplexScalar]:
        return [
            BicomplexScalar(l1, l2)
            for l1 in self.comp1.eigenvalues
            for l2 in self.comp2.eigenvalues
        ]


def bicomplex_jordan(a: BicomplexMatrix) -> BicomplexJordanData:
    """Jordan form per component, assembled as P = P1 e + P2 e†,
    J = J1 e + J2 e†, with exact reconstruction verified."""
    if not a.is_square():
        raise NotSquare("jordan form needs a square matrix")
    try:
        comp1 = complex_jordan(a.m1)
    except DoesNotSplit as exc:
        exc.component = 1
        raise
    try:
        comp2 = complex_jordan(a.m2)
    except DoesNotSplit as exc:
        exc.component = 2
        raise
    data = BicomplexJordanData(
        comp1=comp1,
        comp2=comp2,
        p=BicomplexMatrix(comp1.transition, comp2.transition),
        j=BicomplexMatrix(comp1.jordan, comp2.jordan),
    )
    if data.reconstruct() != a:
        raise ConsistencyFailure("bicomplex jordan reconstruction failed")
    return data


def _reordered(data: ComplexJordanData, order: Sequence[int]) -> ComplexJordanData:
    chains = [data.chains[i] for i in order]
    p, j = _assemble_from_chains(chains, data.n)
    return ComplexJordanData(
        eigenvalues=data.eigenvalues,
        blocks=data.blocks,
        chains=chains,
        transition=p,
        jordan=j,
    )


def enumerate_pairings(data: BicomplexJordanData, limit: int = 1000):
    """Yield the block-permuted variants of a bicomplex Jordan form.

    Each variant reorders the Jordan chains of one or both components,
    giving a different (but equally valid) P and J.  Variants are
    deduplicated by the (eigenvalue, size) block sequences; the count is
    capped at ``limit`` to keep the factorial growth in check.
    """

    def distinct_orders(comp: ComplexJordanData):
        seen = set()
        for perm in itertools.permutations(range(len(comp.chains))):
            key = tuple((comp.chains[i][0], len(comp.chains[i][1])) for i in perm)
            if key not in seen:
                seen.add(key)
                yield perm

    count = 0
    for o1 in distinct_orders(data.comp1):
        for o2 in distinct_orders(data.comp2):
            count += 1
            if count > limit:
                raise ValueError(
                    f"more than {limit} block-permuted variants; raise the limit"
                )
            c1 = _reordered(data.comp1, o1)
            c2 = _reordered(data.comp2, o2)
            yield BicomplexJordanData(
                comp1=c1,
                comp2=c2,
                p=BicomplexMatrix(c1.transition, c2.transition),
                j=BicomplexMatrix(c1.jordan, c2.jordan),
            )
