"""Container file formats."""
