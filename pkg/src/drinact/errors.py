"""Exception hierarchy for drinact.

Every error raised on purpose by this package derives from DrinactError, so
callers can catch the whole family at once.  Errors signalling a violated
mathematical precondition additionally derive from MathDomainError; errors
caused by malformed user input derive from InputError.  The CLI maps these
two branches to distinct exit codes.
"""


class DrinactError(Exception):
    """Base class for all drinact errors."""


class InputError(DrinactError):
    """Malformed or ill-typed input (CLI exit code 2)."""


class MathDomainError(DrinactError):
    """A mathematical precondition does not hold (CLI exit code 3)."""


# -- fields and encodings ---------------------------------------------------

class MixedFields(MathDomainError):
    """Operands belong to different fields."""


class DivisionByZero(MathDomainError, ZeroDivisionError):
    """Division by a zero element or zero polynomial."""


class MalformedHex(InputError, ValueError):
    """A textual polynomial encoding cannot be parsed."""


class WrongCharacteristic(InputError, ValueError):
    """The hex encoding only exists over F_2."""


# -- commutative polynomials ------------------------------------------------

class ZeroPolynomial(MathDomainError, ValueError):
    """The operation is undefined for the zero polynomial."""


class GenerationFailed(DrinactError, RuntimeError):
    """A randomized search exhausted its iteration cap."""


# -- Ore polynomials ---------------------------------------------------------

class BothZero(MathDomainError, ValueError):
    """rgcd of two zero Ore polynomials is undefined."""


class NotRightDivisible(MathDomainError, ArithmeticError):
    """Exact right division left a nonzero remainder."""


# -- Drinfeld modules --------------------------------------------------------

class EvenDegreeExtension(MathDomainError, ValueError):
    """The Frobenius characteristic polynomial requires odd extension degree."""


class InconsistentSystem(MathDomainError, ArithmeticError):
    """An internal linear system had no (or no unique) solution; this
    signals a bug or corrupted input, not a legitimate outcome."""


class NotSeparable(MathDomainError, ArithmeticError):
    """The Ore polynomial has zero constant coefficient."""


class NotAnIsogeny(MathDomainError, ArithmeticError):
    """The commutation identity defining an isogeny fails."""


# -- hyperelliptic curves and divisors ----------------------------------------

class SingularCurve(MathDomainError, ValueError):
    """The affine plane curve has a singular point."""


class DegreeConstraintViolated(MathDomainError, ValueError):
    """Polynomial degrees violate the imaginary hyperelliptic shape."""


class ZeroH(MathDomainError, ValueError):
    """The linear-in-Y coefficient of the curve must be nonzero."""


class NotMonic(MathDomainError, ValueError):
    """A polynomial required to be monic is not."""


class DegreeTooLarge(MathDomainError, ValueError):
    """A Mumford u-polynomial exceeds the genus bound."""


class DivisibilityFails(MathDomainError, ValueError):
    """u does not divide v^2 + h*v - f."""


class MixedCurves(MathDomainError):
    """Divisors live on different curves."""


# -- class-group action -------------------------------------------------------

class InvalidInstance(MathDomainError, ValueError):
    """An instance violates one of its structural invariants."""


class ZeroJInvariant(MathDomainError, ValueError):
    """The group action is undefined at j = 0."""


class CharpolyMismatch(MathDomainError, ValueError):
    """A Drinfeld module does not match the instance's Frobenius
    characteristic polynomial."""


class InvalidMumford(MathDomainError, ValueError):
    """A (u, v) pair is not a valid reduced divisor."""


class NoSolution(MathDomainError, ArithmeticError):
    """The isogeny is not associated to a prime ideal of the expected shape."""


# -- brute-force oracles -------------------------------------------------------

class TooLarge(DrinactError, ValueError):
    """The enumeration domain exceeds the safety guard."""
