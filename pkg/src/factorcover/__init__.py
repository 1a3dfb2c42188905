"""Spectral conditions for factor-covered graphs: library, service and CLI."""

__version__ = "0.1.0"
