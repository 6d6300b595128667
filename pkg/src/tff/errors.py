"""Exception types shared across the package."""


class ResourceError(RuntimeError):
    """A configured size cap would be exceeded; raised instead of truncating."""


class NeedsExtension(ArithmeticError):
    """The exact value leaves the cyclotomic-rational field we can represent."""


class DatasetError(ValueError):
    """Schema or consistency failure in a fixed-point dataset.

    ``diagnostics`` carries the individual findings (path + message).
    """

    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)
