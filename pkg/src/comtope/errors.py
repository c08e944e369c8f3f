"""Exception hierarchy shared by every module."""


class ComError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DimensionError(ComError, ValueError):
    """Sign vectors or points of incompatible length."""


class UnknownElementError(ComError, KeyError):
    """A ground-set label that is not part of the system."""

    def __str__(self):
        return Exception.__str__(self)


class EmptySystemError(ComError, ValueError):
    pass


class InvalidTopeSetError(ComError, ValueError):
    """Tope set that is empty or whose members have differing supports."""


class SizeGuardError(ComError, ValueError):
    """Reconstruction would enumerate an impractically large candidate space."""


class OnHyperplaneError(ComError, ValueError):
    """A sample point lies on (or within epsilon of) a hyperplane."""

    def __init__(self, point, label, value):
        self.point = point
        self.label = label
        self.value = value
        super().__init__(
            f"point {tuple(str(c) for c in point)} lies on hyperplane {label!r} "
            f"(form evaluates to {value}); sample points must lie in open chambers"
        )


class FormatError(ValueError):
    """Malformed input file (CLI exit code 2)."""


class ConsistencyError(AssertionError):
    """Two independent computations that must agree did not."""
