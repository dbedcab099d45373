from cli_report.cli import build_parser, main

__all__ = ["build_parser", "main"]
