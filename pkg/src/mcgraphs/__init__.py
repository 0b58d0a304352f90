"""Exact constructions and certificates for monochromatic components in edge-colored graphs."""

__version__ = "0.1.0"
