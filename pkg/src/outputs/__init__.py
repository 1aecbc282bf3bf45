"""Artifact writers."""

from .writers import build_metadata, header_lines, write_json, write_csv

__all__ = ["build_metadata", "header_lines", "write_json", "write_csv"]
