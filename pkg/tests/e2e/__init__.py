"""End-to-end tests."""

