"""Tests for sesx."""
