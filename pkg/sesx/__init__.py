"""sesx - compress texts into substring equation systems built from super-maximal right extensions."""

__version__ = "0.3.0"
