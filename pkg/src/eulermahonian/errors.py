"""Exception types shared across the package."""


class EulerMahonianError(Exception):
    """Base class for all package errors."""


class DomainError(EulerMahonianError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(EulerMahonianError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NonDivisibleError(EulerMahonianError, ArithmeticError):
    """Exact division failed; ``remainder`` holds the partially reduced dividend."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder
