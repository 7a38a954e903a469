"""Exact enumeration, solving and certification of line systems with few angles."""

__version__ = "0.1.0"
