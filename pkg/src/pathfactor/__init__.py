"""Exact toughness parameters, path-factor deciders and avoidability checks for small graphs."""

__version__ = "0.1.0"
