"""Exception types raised across the package."""


class RieszError(ArithmeticError):
    """Base class for all package errors."""


class ZeroConstantTerm(RieszError):
    pass


class NonzeroInnerConstant(RieszError):
    pass


class InsufficientVariables(RieszError):
    pass


class OddArgument(RieszError):
    pass


class OddPiExponent(RieszError):
    pass


class PiResidue(RieszError):
    """A value expected to be rational still carries a power of pi."""


class PoleAtOne(RieszError):
    pass


class IndexOutOfRange(RieszError):
    pass


class DomainError(RieszError):
    pass


class NoConvergenceCertificate(RieszError):
    pass
