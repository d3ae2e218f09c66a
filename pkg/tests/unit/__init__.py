"""Unit tests."""

