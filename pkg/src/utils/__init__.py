"""
Utility modules for the Hackenbush workbench
"""

from .logging_setup import setup_logging, LOG_FORMAT
from .report_format import dump_document, format_report, format_table, paint

__all__ = ['setup_logging', 'LOG_FORMAT', 'dump_document', 'format_report', 'format_table', 'paint']
