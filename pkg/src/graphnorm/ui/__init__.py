"""Console rendering of experiment reports."""

from .report_display import (
    console,
    display_error,
    display_report,
    display_run_summary,
    display_saved,
    format_value,
)

__all__ = [
    "console",
    "display_error",
    "display_report",
    "display_run_summary",
    "display_saved",
    "format_value",
]
