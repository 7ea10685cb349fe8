"""Command line entry point."""

from src.cli.main import build_parser, cli_dispatch, main

__all__ = ["build_parser", "cli_dispatch", "main"]
