"""Exception hierarchy shared by the package."""


class EditClustError(Exception):
    """Base class for all errors raised by editclust."""


class ConfigurationError(EditClustError, ValueError):
    """Invalid parameters: empty alphabet, bad cost matrix, k > m, ..."""


class PreconditionError(EditClustError, ValueError):
    """An operation was called with arguments outside its domain."""


class InvariantError(EditClustError, RuntimeError):
    """Internal consistency check failed (e.g. a corrupted DP matrix)."""


class DataError(EditClustError):
    """A dataset or auxiliary file could not be parsed."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class GenerationError(EditClustError):
    """Synthetic data generation gave up after its attempt budget."""


class UnsupportedError(EditClustError):
    """Requested feature lies outside what the package supports."""
