"""Command-line front end."""

from .commands import build_cache, cmd_compute, cmd_series, cmd_verify, suite_config_for
from .render import (
    field_from_json,
    render_reports,
    render_series,
    render_table,
    table_from_json,
    table_payload,
    value_latex,
    value_parts,
    value_text,
)

__all__ = [
    'build_cache',
    'cmd_compute',
    'cmd_series',
    'cmd_verify',
    'suite_config_for',
    'field_from_json',
    'render_reports',
    'render_series',
    'render_table',
    'table_from_json',
    'table_payload',
    'value_latex',
    'value_parts',
    'value_text',
]
