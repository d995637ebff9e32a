"""
Human-readable and machine-readable rendering of results
"""

import json
from typing import Any, Dict, List, Sequence

from colorama import Fore, Style

from src.enumeration.verify import VerificationReport


def dump_document(document: Dict[str, Any]) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def paint(text: str, color: str, enabled: bool) -> str:
    """Wrap text in a colorama color when enabled"""
    if not enabled:
        return text
    return f"{color}{text}{Style.RESET_ALL}"


def format_table(headers: Sequence[str], rows: List[Sequence[str]]) -> str:
    widths = [len(header) for header in headers]
    for row in rows:
        for index, cell in enumerate(row):
            widths[index] = max(widths[index], len(cell))
    lines = ["  ".join(header.ljust(width) for header, width in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * width for width in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def format_report(report: VerificationReport, color: bool = False, timing: bool = False) -> str:
    """Summary of a verification report"""
    status = (paint("PASS", Fore.GREEN, color) if report.passed
              else paint("FAIL", Fore.RED, color))
    bounds = ", ".join(f"{key}={value}" for key, value in sorted(report.bounds.items()))
    lines = [
        f"suite: {report.suite} [{status}]",
        f"bounds: {bounds}",
        f"seed: {report.seed}",
        f"positions checked: {report.positions_checked}",
        f"mismatches: {len(report.mismatches)}",
    ]
    if timing:
        lines.append(f"elapsed: {report.elapsed_seconds:.2f}s")
    for mismatch in report.mismatches[:10]:
        flat = mismatch.position.strip().replace("\n", "; ")
        lines.append(f"  [{mismatch.check}] expected {mismatch.expected}, got {mismatch.got}: {flat}")
    if len(report.mismatches) > 10:
        lines.append(f"  ... {len(report.mismatches) - 10} more")
    for key, value in sorted(report.findings.items()):
        if isinstance(value, list):
            value = f"{len(value)} examples"
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"
