"""
Command-line interface for the Hackenbush workbench
"""

from .commands import run, build_parser, EXIT_OK, EXIT_ERROR, EXIT_MISMATCH
from .schema import validate_document

__all__ = ['run', 'build_parser', 'EXIT_OK', 'EXIT_ERROR', 'EXIT_MISMATCH', 'validate_document']
