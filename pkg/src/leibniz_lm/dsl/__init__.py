"""Definition documents, the check/construct engine and the command line."""

from .document import DefinitionDocument, DocumentBuilder, dump_document, parse_document
from .engine import RECIPES, UsageError, emit_report, emit_reports, parse_report, run_check, run_construct
from .jsonpos import Diagnostic, DocumentError

__all__ = [
    "DefinitionDocument",
    "DocumentBuilder",
    "Diagnostic",
    "DocumentError",
    "RECIPES",
    "UsageError",
    "dump_document",
    "emit_report",
    "emit_reports",
    "parse_document",
    "parse_report",
    "run_check",
    "run_construct",
]
