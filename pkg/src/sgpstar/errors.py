"""Exception hierarchy shared by every module."""


class SgpError(Exception):
    """Base class; the CLI maps subclasses onto exit codes."""


class InputError(SgpError, ValueError):
    pass


class EmptyGenerators(InputError):
    pass


class GcdNotOne(InputError):
    pass


class NotIntegral(InputError):
    pass


class NotOverring(InputError):
    pass


class IntersectionNotS(InputError):
    pass


class FieldMismatch(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class NotInR(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownStar(InputError):
    pass


class ResourceCap(SgpError):
    pass


class PosetTooLarge(ResourceCap):
    pass


class SearchTooLarge(ResourceCap):
    pass


class CapExceeded(ResourceCap):
    pass


class AxiomViolation(SgpError):
    def __init__(self, axiom, witness):
        super().__init__(f"{axiom} violated: {witness}")
        self.axiom = axiom
        self.witness = witness


class InternalInvariantBroken(SgpError, AssertionError):
    pass
