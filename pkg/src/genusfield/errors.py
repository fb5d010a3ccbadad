"""Exception hierarchy.

Every validation failure raised by the library derives from
:class:`InvalidInput`, which the CLI maps to exit code 2.  Oracle failures
derive from :class:`VerificationError` (exit code 3).
"""


class GenusFieldError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(GenusFieldError, ValueError):
    """Input violates a documented precondition."""


class NotPrime(InvalidInput):
    pass


class ReducibleModulus(InvalidInput):
    pass


class DegreeMismatch(InvalidInput):
    pass


class FieldTooLarge(InvalidInput):
    pass


class FieldMismatch(InvalidInput):
    pass


class PolySyntaxError(InvalidInput):
    """Malformed polynomial or element literal; ``position`` is a 0-based offset."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class UnknownCoefficient(InvalidInput):
    pass


class ZeroPolynomial(InvalidInput):
    pass


class NotMonic(InvalidInput):
    pass


class ConstantPolynomial(InvalidInput):
    pass


class NotIrreducible(InvalidInput):
    pass


class NotKummer(InvalidInput):
    pass


class WildPrime(InvalidInput):
    pass


class ConstantRadical(InvalidInput):
    pass


class DependentGenerators(InvalidInput):
    """Generators are F_l-dependent modulo constants.

    ``witness`` is the exponent vector alpha (entries in [0, l)) whose
    radical product has trivial polynomial part.
    """

    def __init__(self, message, witness=()):
        self.witness = tuple(witness)
        super().__init__(f"{message}; witness alpha={list(self.witness)}")


class UnramifiedListedPrime(InvalidInput):
    pass


class GroupTooLarge(InvalidInput):
    pass


class AllDegreesDivisible(InvalidInput):
    pass


class Undefined(InvalidInput):
    pass


class PreconditionViolated(InvalidInput):
    pass


class NotContained(InvalidInput):
    pass


class BoundExceeded(InvalidInput):
    pass


class VerificationError(GenusFieldError):
    pass


class InternalInconsistency(VerificationError):
    pass


class NoUniqueMaximum(VerificationError):
    pass


class NoDegreeLSubfield(InvalidInput):
    """l does not divide q^deg(P) - 1, so P cannot be tamely ramified of index l."""
