"""Exception types shared across the package.

Input problems also subclass ``ValueError`` so callers that already catch
``ValueError`` keep working.
"""

from __future__ import annotations


class ModalcharError(Exception):
    """Base class for every error raised on purpose by this package."""


class FormulaSyntaxError(ModalcharError, ValueError):
    """Raised when formula text does not follow the grammar."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownPropositionError(ModalcharError, ValueError):
    """Raised when a formula mentions a name outside the declared signature."""


class SignatureError(ModalcharError, ValueError):
    """Raised when formulas/models disagree on their proposition signature."""


class FragmentError(ModalcharError, ValueError):
    """Raised when a formula uses a connective the operation does not accept."""


class ModelFormatError(ModalcharError, ValueError):
    """Raised for malformed model or relation files."""


class MalformedNormalFormError(ModalcharError, ValueError):
    """Raised when a basic normal form breaks its shape invariants."""


class NotAConstructedExampleError(ModalcharError, ValueError):
    """Raised when a model is not one of the constructed positive examples."""


class SizeGuardExceeded(ModalcharError, RuntimeError):
    """Raised when a construction would grow past its configured cap."""


class FitVerificationError(ModalcharError, AssertionError):
    """Raised when a freshly built characterisation does not fit its formula."""


__all__ = [
    "FitVerificationError",
    "FormulaSyntaxError",
    "FragmentError",
    "MalformedNormalFormError",
    "ModalcharError",
    "ModelFormatError",
    "NotAConstructedExampleError",
    "SignatureError",
    "SizeGuardExceeded",
    "UnknownPropositionError",
]
