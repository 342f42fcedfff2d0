class GammaKitError(Exception):
    """Base class for every error raised by the gamma package."""


class PartitionError(GammaKitError, ValueError):
    """A part sequence is not a valid partition or composition."""


class ShapeError(GammaKitError, ValueError):
    """A diagram is malformed or a statistic is undefined on it."""


class GuardError(GammaKitError):
    """A size or time guard was exceeded."""

    def __init__(self, what, value, limit):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the guard {limit} (raise it with --guard)")


class InconsistentSystemError(GammaKitError):
    """An exact linear system has no solution, or no unique one."""


class UsageError(GammaKitError):
    """Command-line arguments do not follow the grammar."""


class GraphSyntaxError(GammaKitError, ValueError):
    """Graph text does not follow the graph grammar."""


def check_guard(what, value, limit):
    if limit is not None and value > limit:
        raise GuardError(what, value, limit)
