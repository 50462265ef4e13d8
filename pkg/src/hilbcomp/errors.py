"""Exception types shared across the kernel."""


class KernelError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(KernelError):
    """Operands live in incompatible polynomial rings."""


class ParseError(KernelError):
    """Malformed polynomial text.  Carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class HomogeneityError(KernelError):
    """An operation that requires homogeneous input received inhomogeneous input."""


class ClassificationError(KernelError):
    """The ideal is outside the domain of the four-type classification."""


class RetriesExhaustedError(KernelError):
    """A randomized subroutine failed its validity gate on every attempt."""


class LatticeDataError(KernelError):
    """Pairing data is inconsistent, fails to determine a unique solution,
    or a divisor class lies outside its cone domain."""
