"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """Base class for mathematically invalid requests (CLI exit code 3)."""


class NotAUnit(DomainError):
    pass


class ZeroEvaluationPoint(DomainError):
    pass


class NotSymmetric(DomainError):
    pass


class NotPrimitive(DomainError):
    pass


class BadDeterminant(DomainError):
    pass


class NoDecomposition(DomainError):
    pass


class IdempotentUndefined(DomainError):
    pass
