"""Shared utilities for the qschur-calculus tools."""

from .cli_utils import EXIT_FAILED, EXIT_OK, EXIT_USAGE, guarded, new_parser
from .color_utils import colour_str, status_str

__all__ = ["EXIT_FAILED", "EXIT_OK", "EXIT_USAGE", "colour_str", "guarded", "new_parser", "status_str"]
