"""Exception taxonomy shared by all modules."""


class MhlError(Exception):
    """Base class for every error raised by this package."""


class InputError(MhlError):
    """Malformed user input: bad spec, element out of range, unparsable file."""


class PreconditionError(MhlError):
    """An operation was called on arguments violating its contract."""


class NoCircuitError(MhlError):
    """Requested the fundamental circuit of an element that extends independence."""


class CapacityError(MhlError):
    """Ground set too large for an exhaustive-enumeration operation."""


class ValidationError(MhlError):
    """A path or cycle failed structural validation against the digraph."""


class PropertyViolation(MhlError):
    """A proven invariant failed at runtime; the oracle pair is not a matroid pair,
    or there is a bug."""
