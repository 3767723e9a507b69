"""Tests for sylow-orbit."""
