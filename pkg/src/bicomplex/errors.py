"""Exception types shared across the package.

Every domain failure raises a named subclass of BicomplexError so that
callers (and the CLI) can report structured error names instead of bare
messages.
"""


class BicomplexError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


class BackendMismatch(BicomplexError):
    """Operands live on different coefficient-field backends."""


class ShapeMismatch(BicomplexError):
    """Matrix/vector dimensions are incompatible for the operation."""


class NotSquare(BicomplexError):
    """Operation requires a square matrix."""


class NotInvertible(BicomplexError):
    """Scalar has a vanishing idempotent component.

    ``components`` lists which component indices (1 and/or 2) are zero.
    """

    def __init__(self, components):
        self.components = tuple(components)
        super().__init__(f"scalar not invertible: component(s) {self.components} zero")


class SingularComponent(BicomplexError):
    """Matrix inverse failed; ``which`` is 1, 2 or 'both'."""

    def __init__(self, which):
        self.which = which
        super().__init__(f"singular idempotent component: {which}")


class UnsupportedOnExactBackend(BicomplexError):
    """Operation would leave the Gaussian-rational field."""


class EmptySet(BicomplexError):
    """An infimum of an empty collection was requested."""


class EigenvalueFieldError(BicomplexError):
    """Exact eigenvalue extraction left the Gaussian rationals."""


class DoesNotSplit(EigenvalueFieldError):
    """Characteristic polynomial has an irreducible factor of degree >= 2
    over the Gaussian rationals.  ``remainder`` holds that factor's
    coefficients (ascending order)."""

    def __init__(self, remainder):
        self.remainder = tuple(remainder)
        super().__init__(
            "characteristic polynomial does not split over the Gaussian "
            f"rationals; remaining factor of degree {len(self.remainder) - 1}"
        )


class ConsistencyFailure(BicomplexError):
    """An internal exact verification failed; indicates a bug."""


class NotSelfAdjoint(BicomplexError):
    """Matrix is not self-adjoint within tolerance."""


class NoConvergence(BicomplexError):
    """Iteration hit its sweep cap before reaching tolerance."""

    def __init__(self, sweeps, off_mass=None):
        self.sweeps = sweeps
        self.off_mass = off_mass
        super().__init__(f"no convergence after {sweeps} sweeps (off-diagonal mass {off_mass})")


class DegenerateSpectrum(BicomplexError):
    """Eigenvalue gaps fall below the separation tolerance, so pairing
    enumeration is ill-defined."""


class SubspaceIsFull(BicomplexError):
    """Riesz witness requested against a subspace equal to the whole space."""
