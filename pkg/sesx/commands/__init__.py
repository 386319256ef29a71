"""Command implementations, registered on the root app by ``sesx.main``."""
