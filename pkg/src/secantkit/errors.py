"""Exception types raised by secantkit."""


class SecantKitError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ContextMismatch(SecantKitError, ValueError):
    pass


class InvalidInput(SecantKitError, ValueError):
    pass


class UnsupportedMethod(SecantKitError):
    pass


class LimitExceeded(SecantKitError):
    """An exhaustive enumeration would exceed its configured cap."""
