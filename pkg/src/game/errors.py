"""
Exception hierarchy for the Hackenbush workbench
"""

from typing import Optional


class HackenbushError(Exception):
    """Base class for every error raised by the workbench"""


class PositionFormatError(HackenbushError):
    """Malformed position file or inconsistent position data"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PositionTooLargeError(HackenbushError):
    """Position has more edges than a state key can address"""


class UnknownEdgeError(HackenbushError):
    """Edge id not present in the position"""


class GreenEdgeError(HackenbushError):
    """Red-Blue only operation applied to a position with green edges"""


class ConfigError(HackenbushError):
    """Unknown or unreadable configuration preset"""
