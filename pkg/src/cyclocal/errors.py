"""Exception hierarchy shared by all cyclocal modules."""


class CyclocalError(Exception):
    """Base class for all library errors."""


class AmbientMismatch(CyclocalError):
    """Operands live in different ambient rings."""


class DivisionByZero(CyclocalError):
    """Division by the zero polynomial or zero denominator."""


class IncompleteMap(CyclocalError):
    """A substitution map is missing the image of some variable."""


class NotAUnit(CyclocalError):
    """An element required to be a unit of the localization lies in the prime."""


class UnsupportedDomain(CyclocalError):
    """Operation requires field coefficients (e.g. Groebner bases over the integers)."""


class ZeroIdeal(CyclocalError):
    """Operation requires a nonzero ideal."""


class OrderViolation(CyclocalError):
    """Declared group order does not match the automorphism's actual order."""


class NotLocal(CyclocalError):
    """Some variable image does not differ from the variable by a prime element."""


class NotPrime(CyclocalError):
    """The declared group order is not a prime number."""


class DegenerateOrbit(CyclocalError):
    """The chosen element is fixed by the action, so its orbit collapses."""


class TrivialAction(CyclocalError):
    """All variable augmentations vanish; the augmentation ideal is zero."""


class InternalIdentityViolation(CyclocalError):
    """A division that is guaranteed exact by a polynomial identity failed.

    This signals an implementation bug, never bad user input.
    """


class NotAGenerator(CyclocalError):
    """The supplied element does not generate the augmentation ideal locally."""


class DescentFailure(CyclocalError):
    """Descent produced a non-invariant coefficient or failed to recompose."""


class InvalidInstance(CyclocalError):
    """Precondition violation on a verification instance."""


class NotAParameterSystem(CyclocalError):
    """The supplied polynomials do not generate the distinguished prime."""


class ConstructionFailure(CyclocalError):
    """A constructed parameter system failed its own verification."""


class NotCofinal(CyclocalError):
    """The declared invariant generators do not cut out a finite quotient."""


class OutOfRange(CyclocalError):
    """Numeric argument outside the supported range."""


class ScenarioParseError(CyclocalError):
    """Scenario file is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
