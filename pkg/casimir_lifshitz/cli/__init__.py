from .commands import Command, CommandMap, RunContext, UsageError, command_map
from .fixtures import ReferenceTable, load_reference_table, packaged_fixture, parse_reference_table
from .main import build_manifest, build_parser, main
from .output import Column, ColumnKind, Report, format_cell, render_report, write_report

__all__ = [
    "Column",
    "ColumnKind",
    "Command",
    "CommandMap",
    "ReferenceTable",
    "Report",
    "RunContext",
    "UsageError",
    "build_manifest",
    "build_parser",
    "command_map",
    "format_cell",
    "load_reference_table",
    "main",
    "packaged_fixture",
    "parse_reference_table",
    "render_report",
    "write_report",
]
