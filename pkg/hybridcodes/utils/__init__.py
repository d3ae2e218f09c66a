"""Utility helpers."""

from .json_encoder import toolkit_jsonable

__all__ = ["toolkit_jsonable"]
