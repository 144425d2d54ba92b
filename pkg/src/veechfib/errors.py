"""Exception hierarchy for the veechfib package.

Input-validation failures (bad discriminants, unsupported families,
inadmissible primes) are distinguished from mathematical inconsistencies
discovered mid-computation (non-integral cover genus, identity
violations).  The CLI maps the former to exit code 2 and the latter to
exit code 1.
"""


class VeechFibError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(VeechFibError, ValueError):
    """An argument fails a precondition (wrong range, wrong type, ...)."""


class NoRealRootError(VeechFibError):
    """Root isolation was asked for a polynomial without real roots."""


class UnsupportedFamilyError(InvalidArgumentError):
    """A family tag outside the supported series was requested."""


class UnsupportedGraphError(VeechFibError):
    """The Perron-Frobenius data of a graph cannot be certified exactly."""


class InvalidDiscriminantError(InvalidArgumentError):
    """Discriminant is square or not congruent to 0, 1 mod 4."""


class SpinRequiredError(InvalidArgumentError):
    """Prototype enumeration for D = 1 mod 8 needs an explicit spin filter."""


class InadmissiblePrimeError(InvalidArgumentError):
    """The residue criterion rejects this prime for the given family."""


class MixedModulusError(InvalidArgumentError):
    """Arithmetic was attempted between elements of different number rings."""


class NonIntegralElementError(VeechFibError):
    """Minimal polynomial of a non-integral element was requested as integer.

    Carries the exact rational coefficients in ``rational_coefficients``.
    """

    def __init__(self, message, rational_coefficients):
        super().__init__(message)
        self.rational_coefficients = tuple(rational_coefficients)


class MathematicalInconsistencyError(VeechFibError):
    """A derived quantity violates an exact identity it must satisfy."""


class InconsistentCoverError(MathematicalInconsistencyError):
    """Riemann-Hurwitz data does not produce a nonnegative integer genus."""


class InvalidRootDataError(MathematicalInconsistencyError):
    """A cusp twist count fails integrality against its root index."""


class CapExceededError(VeechFibError):
    """A breadth-first group closure outgrew the configured cap."""


class InapplicableModelError(InvalidArgumentError):
    """A structural check was invoked on a model it does not apply to."""


class MissingCurveDataError(InvalidArgumentError):
    """No Euler characteristic data is available for this discriminant."""
