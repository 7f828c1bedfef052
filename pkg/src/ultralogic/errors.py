"""Exception types raised across the package."""


class UltralogicError(Exception):
    pass


# word codec
class UnknownGlyph(UltralogicError):
    pass


class BadCode(UltralogicError):
    pass


class NoDecomposition(UltralogicError):
    pass


# consequence operators and processes
class EmptyProcess(UltralogicError):
    pass


class NotTotal(UltralogicError):
    pass


class UniverseTooLarge(UltralogicError):
    pass


class NotInjective(UltralogicError):
    pass


class UniverseMismatch(UltralogicError):
    pass


class AxiomPrecondition(UltralogicError):
    pass


# engines
class NotFlatForm(UltralogicError):
    pass


class IndexOverflow(UltralogicError):
    pass


class BudgetExceeded(UltralogicError):
    pass


class FormulaSyntaxError(UltralogicError, ValueError):
    pass


# orders
class EmptySet(UltralogicError):
    pass


# superstructures
class CapExceeded(UltralogicError):
    pass


class DepthUnavailable(UltralogicError):
    pass


# cli
class ConfigInvalid(UltralogicError):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
