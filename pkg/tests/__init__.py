"""Tests for prsplit."""
