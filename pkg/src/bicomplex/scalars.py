"""Bicomplex and hyperbolic scalar arithmetic in the idempotent representation.

A bicomplex number z1 + j*z2 is stored purely by its idempotent components
(c1, c2), the coefficients of e = (1+ij)/2 and e† = (1-ij)/2.  Every ring
operation then acts componentwise, which is what makes the rest of the
package (matrices, Jordan forms, operators) componentwise as well.

Two coefficient-field backends are supported:

* ``"exact"``  -- Gaussian rationals (``GaussianRational``, Fraction re/im),
  with structural equality everywhere.
* ``"float"``  -- Python ``complex``.

Hyperbolic (norm) values live in ``HyperbolicValue``.  On the exact backend
moduli are irrational in general, so norms are stored as *squared* moduli
(rational) and flagged; order predicates stay exact because squaring is
monotone on nonnegative reals.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import (
    BackendMismatch,
    EmptySet,
    NotInvertible,
    UnsupportedOnExactBackend,
)

EXACT = "exact"
FLOAT = "float"

#: default relative tolerance for float-backend approximate equality
FLOAT_EQ_TOL = 1e-12


class GaussianRational:
    """Exact complex number with rational real and imaginary parts.

    ``Fraction`` keeps numerator/denominator in lowest terms with a positive
    denominator, so equality is structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *a):
        raise AttributeError("GaussianRational is immutable")

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are exact")
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, always rational."""
        return self.re * self.re + self.im * self.im

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _as_gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, Rational):  # int, Fraction
        return GaussianRational(x)
    return NotImplemented


ComponentScalar = Union[GaussianRational, complex]


def _component_backend(c) -> str:
    if isinstance(c, GaussianRational):
        return EXACT
    if isinstance(c, complex):
        return FLOAT
    raise TypeError(f"not a component scalar: {c!r}")


def infer_backend(value) -> str:
    """Natural backend for a raw entry: exact for int/Fraction, float for
    float/complex."""
    if isinstance(value, (GaussianRational, Rational)):
        return EXACT
    if isinstance(value, (complex, float)):
        return FLOAT
    raise TypeError(f"cannot infer a backend for {value!r}")


def coerce_component(value, backend: str):
    """Bring ints / Fractions / complex / GaussianRational onto a backend."""
    if backend == EXACT:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return GaussianRational(value)
        raise BackendMismatch(f"cannot represent {value!r} exactly")
    if isinstance(value, GaussianRational):
        return complex(value)
    return complex(value)


class Ordering(enum.Enum):
    """Outcome of comparing two hyperbolic values in the partial order."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class HyperbolicValue:
    """Nonnegative hyperbolic number h1*e + h2*e†, used for norms and radii.

    ``squared`` marks exact-backend values that store squared moduli (the
    rational surrogate for an irrational modulus).  Comparisons between a
    squared and an unsquared value square the latter first, which preserves
    the order since both components are nonnegative.
    """

    h1: Union[Fraction, float]
    h2: Union[Fraction, float]
    squared: bool = False

    def __post_init__(self):
        if self.h1 < 0 or self.h2 < 0:
            raise ValueError(f"hyperbolic components must be nonnegative: ({self.h1}, {self.h2})")

    # -- arithmetic (componentwise) -----------------------------------------
    def __add__(self, other: "HyperbolicValue") -> "HyperbolicValue":
        if self.squared != other.squared:
            raise ValueError("cannot add squared and unsquared hyperbolic values")
        return HyperbolicValue(self.h1 + other.h1, self.h2 + other.h2, self.squared)

    def __mul__(self, other: "HyperbolicValue") -> "HyperbolicValue":
        if self.squared != other.squared:
            raise ValueError("cannot multiply squared and unsquared hyperbolic values")
        return HyperbolicValue(self.h1 * other.h1, self.h2 * other.h2, self.squared)

    def as_squared(self) -> "HyperbolicValue":
        if self.squared:
            return self
        return HyperbolicValue(self.h1 * self.h1, self.h2 * self.h2, True)

    def as_float(self) -> "HyperbolicValue":
        """Unsquared float view (takes real square roots when needed)."""
        if not self.squared:
            return HyperbolicValue(float(self.h1), float(self.h2), False)
        return HyperbolicValue(math.sqrt(self.h1), math.sqrt(self.h2), False)

    def to_scalar(self, backend: str) -> "BicomplexScalar":
        """Embed as a bicomplex scalar with real components.

        Only meaningful for unsquared values (squared ones are a norm
        surrogate, not the number itself).
        """
        if self.squared:
            raise ValueError("squared hyperbolic values do not embed directly")
        if backend == EXACT:
            return BicomplexScalar(GaussianRational(self.h1), GaussianRational(self.h2))
        return BicomplexScalar(complex(self.h1), complex(self.h2))

    # -- partial order -------------------------------------------------------
    def _aligned(self, other: "HyperbolicValue"):
        if self.squared == other.squared:
            return self, other
        return self.as_squared(), other.as_squared()

    def compare(self, other: "HyperbolicValue") -> Ordering:
        a, b = self._aligned(other)
        if a.h1 == b.h1 and a.h2 == b.h2:
            return Ordering.EQUAL
        if a.h1 <= b.h1 and a.h2 <= b.h2:
            return Ordering.LESS
        if a.h1 >= b.h1 and a.h2 >= b.h2:
            return Ordering.GREATER
        return Ordering.INCOMPARABLE

    def strictly_less(self, other: "HyperbolicValue") -> bool:
        """a <_h b: both components strictly smaller."""
        a, b = self._aligned(other)
        return a.h1 < b.h1 and a.h2 < b.h2

    def less_equal(self, other: "HyperbolicValue") -> bool:
        a, b = self._aligned(other)
        return a.h1 <= b.h1 and a.h2 <= b.h2

    def __lt__(self, other):
        return self.strictly_less(other)

    def __le__(self, other):
        return self.less_equal(other)


class BicomplexScalar:
    """A bicomplex number stored in idempotent coordinates (c1, c2).

    The Euclidean form z1 + j*z2 is a view: z1 = (c1+c2)/2 and
    z2 = i*(c1-c2)/2; both components must live on the same backend.
    """

    __slots__ = ("c1", "c2")

    def __init__(self, c1: ComponentScalar, c2: ComponentScalar):
        b1 = _component_backend(c1)
        b2 = _component_backend(c2)
        if b1 != b2:
            raise BackendMismatch(f"components on different backends: {b1} vs {b2}")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    def __setattr__(self, *a):
        raise AttributeError("BicomplexScalar is immutable")

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_idempotent(cls, c1, c2, backend: str = EXACT) -> "BicomplexScalar":
        return cls(coerce_component(c1, backend), coerce_component(c2, backend))

    @classmethod
    def from_euclidean(cls, z1, z2, backend: str = EXACT) -> "BicomplexScalar":
        """Build from z = z1 + j*z2: c1 = z1 - i*z2, c2 = z1 + i*z2."""
        z1 = coerce_component(z1, backend)
        z2 = coerce_component(z2, backend)
        if backend == EXACT:
            i = GaussianRational(0, 1)
        else:
            i = 1j
        return cls(z1 - i * z2, z1 + i * z2)

    @classmethod
    def from_real(cls, x, backend: str = EXACT) -> "BicomplexScalar":
        c = coerce_component(x, backend)
        return cls(c, c)

    @classmethod
    def zero(cls, backend: str = EXACT) -> "BicomplexScalar":
        return cls.from_real(0, backend)

    @classmethod
    def one(cls, backend: str = EXACT) -> "BicomplexScalar":
        return cls.from_real(1, backend)

    @classmethod
    def e(cls, backend: str = EXACT) -> "BicomplexScalar":
        return cls.from_idempotent(1, 0, backend)

    @classmethod
    def e_dagger(cls, backend: str = EXACT) -> "BicomplexScalar":
        return cls.from_idempotent(0, 1, backend)

    # -- views ----------------------------------------------------------------
    @property
    def backend(self) -> str:
        return _component_backend(self.c1)

    def to_euclidean(self):
        """Return (z1, z2) with z = z1 + j*z2."""
        if self.backend == EXACT:
            half = GaussianRational(Fraction(1, 2))
            i = GaussianRational(0, 1)
        else:
            half = complex(0.5)
            i = 1j
        return (self.c1 + self.c2) * half, i * (self.c1 - self.c2) * half

    def to_float(self) -> "BicomplexScalar":
        return BicomplexScalar(complex(self.c1), complex(self.c2))

    def is_complex(self) -> bool:
        """True iff the number lies in C, i.e. c1 == c2."""
        return self.c1 == self.c2

    def is_invertible(self) -> bool:
        return not self._zero_components()

    def is_zero(self) -> bool:
        return _comp_is_zero(self.c1) and _comp_is_zero(self.c2)

    def _zero_components(self):
        out = []
        if _comp_is_zero(self.c1):
            out.append(1)
        if _comp_is_zero(self.c2):
            out.append(2)
        return out

    # -- ring operations --------------------------------------------------------
    def _check(self, other: "BicomplexScalar"):
        if not isinstance(other, BicomplexScalar):
            raise TypeError(f"expected BicomplexScalar, got {other!r}")
        if other.backend != self.backend:
            raise BackendMismatch("mixed exact/float scalars")
        return other

    def __add__(self, other):
        other = self._check(other)
        return BicomplexScalar(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        other = self._check(other)
        return BicomplexScalar(self.c1 - other.c1, self.c2 - other.c2)

    def __mul__(self, other):
        other = self._check(other)
        return BicomplexScalar(self.c1 * other.c1, self.c2 * other.c2)

    def __neg__(self):
        return BicomplexScalar(-self.c1, -self.c2)

    def __pow__(self, n: int):
        out = BicomplexScalar.one(self.backend)
        base = self
        if n < 0:
            base = invert(base)
            n = -n
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "BicomplexScalar":
        return BicomplexScalar(_comp_conj(self.c1), _comp_conj(self.c2))

    # -- equality -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, BicomplexScalar):
            return NotImplemented
        return self.c1 == other.c1 and self.c2 == other.c2

    def __hash__(self):
        return hash((self.c1, self.c2))

    def approx_eq(self, other: "BicomplexScalar", tol: float = FLOAT_EQ_TOL) -> bool:
        """Absolute+relative closeness, for float-backend comparisons."""
        other = self._check(other)
        return _approx(complex(self.c1), complex(other.c1), tol) and _approx(
            complex(self.c2), complex(other.c2), tol
        )

    def __repr__(self):
        return f"BicomplexScalar({self.c1!r}, {self.c2!r})"

    def __str__(self):
        return f"({self.c1})e + ({self.c2})e†"


def _comp_is_zero(c) -> bool:
    if isinstance(c, GaussianRational):
        return c.is_zero()
    return c == 0


def _comp_conj(c):
    if isinstance(c, GaussianRational):
        return c.conjugate()
    return c.conjugate()


def _approx(a: complex, b: complex, tol: float) -> bool:
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) <= tol * scale


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def add(a: BicomplexScalar, b: BicomplexScalar) -> BicomplexScalar:
    return a + b


def sub(a: BicomplexScalar, b: BicomplexScalar) -> BicomplexScalar:
    return a - b


def mul(a: BicomplexScalar, b: BicomplexScalar) -> BicomplexScalar:
    return a * b


def invert(a: BicomplexScalar) -> BicomplexScalar:
    """Componentwise reciprocal; only defined off the zero divisors."""
    zeros = a._zero_components()
    if zeros:
        raise NotInvertible(zeros)
    if a.backend == EXACT:
        one = GaussianRational(1)
        return BicomplexScalar(one / a.c1, one / a.c2)
    return BicomplexScalar(1 / a.c1, 1 / a.c2)


def conjugate(a: BicomplexScalar) -> BicomplexScalar:
    return a.conjugate()


def hyperbolic_norm(a: BicomplexScalar) -> HyperbolicValue:
    """|z|_h = |c1| e + |c2| e†.

    Exact backend returns squared moduli (flagged), keeping the value
    rational; float backend returns the real moduli.
    """
    if a.backend == EXACT:
        return HyperbolicValue(a.c1.abs2(), a.c2.abs2(), squared=True)
    return HyperbolicValue(abs(a.c1), abs(a.c2), squared=False)


def nth_root(a: BicomplexScalar, n: int, branch1: int, branch2: int) -> BicomplexScalar:
    """Componentwise complex nth root with explicit branch per component.

    Branch k of c = rho*exp(i*theta) (theta principal) is
    rho^(1/n) * exp(i*(theta + 2*pi*k)/n), so there are n*n bicomplex roots.
    Exact scalars are rejected: component roots are irrational in general,
    convert with ``to_float`` first.
    """
    if n < 1:
        raise ValueError("root order must be a positive integer")
    if not (0 <= branch1 < n and 0 <= branch2 < n):
        raise ValueError(f"branch indices must lie in [0, {n})")
    if a.backend == EXACT:
        raise UnsupportedOnExactBackend(
            "nth roots are not exactly representable over the Gaussian "
            "rationals in general; use to_float() first"
        )
    return BicomplexScalar(
        _complex_root(a.c1, n, branch1), _complex_root(a.c2, n, branch2)
    )


def _complex_root(c: complex, n: int, branch: int) -> complex:
    if c == 0:
        return 0j
    rho = abs(c) ** (1.0 / n)
    theta = cmath.phase(c)
    return rho * cmath.exp(1j * (theta + 2 * cmath.pi * branch) / n)


def ball_contains(
    center: BicomplexScalar, radius: HyperbolicValue, point: BicomplexScalar
) -> bool:
    """Membership in the open hyperbolic ball B_h(center, radius).

    True iff |point - center|_h <_h radius in the strict componentwise
    order.  Radius components must be strictly positive.
    """
    if radius.h1 <= 0 or radius.h2 <= 0:
        raise ValueError("ball radius components must be strictly positive")
    return hyperbolic_norm(point - center).strictly_less(radius)


def hyperbolic_inf(values: Iterable[HyperbolicValue]) -> HyperbolicValue:
    """Componentwise infimum of a finite nonempty set.

    The result need not be attained by any single element.
    """
    values = list(values)
    if not values:
        raise EmptySet("infimum of an empty set of hyperbolic values")
    squared = values[0].squared
    if any(v.squared != squared for v in values):
        values = [v.as_squared() for v in values]
        squared = True
    return HyperbolicValue(
        min(v.h1 for v in values), min(v.h2 for v in values), squared
    )
