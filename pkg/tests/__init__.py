"""Unit tests for the Boolean symmetry detector."""
