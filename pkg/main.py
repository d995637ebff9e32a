#!/usr/bin/env python3
"""
Hackenbush Workbench - outcome solver and verification bench
Main application entry point
"""

import sys

from src.cli.commands import run


def main():
    """Main entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
