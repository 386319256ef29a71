"""Console output and command helpers."""
