"""Exception types shared across the package."""


class SL2HeckeError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SL2HeckeError, ValueError):
    """Invalid construction parameter (prime, degree, bound)."""


class NotPrime(ParameterError):
    pass


class PTooSmall(ParameterError):
    pass


class UnsupportedDegree(ParameterError):
    pass


class RequiresPrimeField(ParameterError):
    """Raised by constructions that only make sense for q = p."""


class SpecMismatch(SL2HeckeError, TypeError):
    """Operands live over different fields or algebras."""


class DivisionByZero(SL2HeckeError, ZeroDivisionError):
    pass


class ZeroHasNoLog(SL2HeckeError, ValueError):
    pass


class VariableMismatch(SL2HeckeError, ValueError):
    pass


class NoSolution(SL2HeckeError):
    """A bounded linear solve found nothing; raise the bound and retry."""

    def __init__(self, bound, message=None):
        self.bound = bound
        super().__init__(message or f"no solution with length bound {bound}; raise the bound")


class NotCentral(SL2HeckeError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"element does not commute with {witness}")


class NotRecognized(SL2HeckeError):
    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"central element not in the span of component powers up to degree {bound}")


class InternalCheckFailed(SL2HeckeError, AssertionError):
    pass


class ClosedFormMismatch(SL2HeckeError, AssertionError):
    """Computed ideal differs from the closed form. Carries both reduced bases."""

    def __init__(self, computed, expected):
        self.computed = computed
        self.expected = expected
        super().__init__(f"computed basis {computed} != closed form {expected}")


class ExprSyntaxError(SL2HeckeError, SyntaxError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownAtom(ExprSyntaxError):
    pass
