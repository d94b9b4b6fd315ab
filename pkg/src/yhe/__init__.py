"""Yokonuma-Hecke and braids-and-ties algebras in exact arithmetic."""

__version__ = "0.1.0"
