"""Reporting for prsplit: log-log plots and console tables."""
from .svg import emit_loglog_svg, render_loglog_svg

__all__ = [
    "emit_loglog_svg",
    "render_loglog_svg",
]
