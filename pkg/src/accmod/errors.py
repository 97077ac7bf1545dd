"""Exception types shared across the package."""


class AccmodError(Exception):
    """Base class for all package specific errors."""


class AdmissibilityError(AccmodError):
    """The relation ideal is not admissible (or not supported)."""


class RationalFieldError(AccmodError):
    """An enumeration based operation was asked to run over the rationals."""


class EnumerationCapError(AccmodError):
    """Submodule enumeration exceeded the configured cap."""

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


class FactorizationLimitError(AccmodError):
    """Polynomial factorization over the rationals beyond the supported range."""


class InputFormatError(AccmodError):
    """A JSON input file failed validation; message carries field context."""
