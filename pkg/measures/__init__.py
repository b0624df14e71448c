"""Information measures of Boolean functions."""
