"""Toolkit for hybrid quantum-classical stabilizer codes [[n, k:m, d]]."""

from .core.config import Settings, get_settings
from .models import HybridCode, PauliVector, catalog, validate

__version__ = "0.1.0"

__all__ = ["HybridCode", "PauliVector", "Settings", "catalog", "get_settings", "validate"]
