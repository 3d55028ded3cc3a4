"""Command line interface."""

from galog.cli.main import main
from galog.cli.parser import MvSyntaxError, parse_mv, print_mv

__all__ = ["MvSyntaxError", "main", "parse_mv", "print_mv"]
