"""Model files and command reports."""

from .Report import Report, file_digest
from .model_files import model_from_dict, parse_model, parse_povm, write_model
from .report_writer import write_report

__all__ = [
    "Report",
    "file_digest",
    "model_from_dict",
    "parse_model",
    "parse_povm",
    "write_model",
    "write_report",
]
