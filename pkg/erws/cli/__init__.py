"""erws 명령줄 인터페이스"""

from erws.cli.application import ErwsApplication, main
from erws.cli.command import CommandGroup, Subcommand
from erws.cli.commands import ErwsCommands, ScanGrid, parse_checkpoints, scan_cell
from erws.cli.handler import (
    EXIT_FALLBACK,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_RUNTIME,
    EXIT_USAGE,
    CommandResult,
    FallbackAware,
    HandlerInterceptor,
    Logged,
)
from erws.cli.router import CommandRouter, UsageError

__all__ = [
    "ErwsApplication",
    "main",
    "CommandGroup",
    "Subcommand",
    "ErwsCommands",
    "ScanGrid",
    "parse_checkpoints",
    "scan_cell",
    "EXIT_FALLBACK",
    "EXIT_MISMATCH",
    "EXIT_OK",
    "EXIT_RUNTIME",
    "EXIT_USAGE",
    "CommandResult",
    "FallbackAware",
    "HandlerInterceptor",
    "Logged",
    "CommandRouter",
    "UsageError",
]
