"""CLI command implementations for prsplit."""
