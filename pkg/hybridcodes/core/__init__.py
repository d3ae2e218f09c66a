"""Core settings, logging and errors."""

from .config import Settings, get_settings
from .exceptions import (
    CapacityError,
    CatalogLookupError,
    CodeFileError,
    DegenerateTranslationError,
    DimensionError,
    FactorizationError,
    HybridCodeError,
    InconsistencyError,
    InvalidCodeError,
    PreconditionError,
    UnsupportedAlphabetError,
)
from .logging_setup import configure_logging

__all__ = [
    "Settings",
    "get_settings",
    "configure_logging",
    "HybridCodeError",
    "DimensionError",
    "CapacityError",
    "InvalidCodeError",
    "CodeFileError",
    "PreconditionError",
    "DegenerateTranslationError",
    "UnsupportedAlphabetError",
    "InconsistencyError",
    "FactorizationError",
    "CatalogLookupError",
]
