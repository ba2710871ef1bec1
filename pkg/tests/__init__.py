"""Test configuration and utilities."""
