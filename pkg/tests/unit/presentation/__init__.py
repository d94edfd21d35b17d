"""Presentation layer unit tests."""
