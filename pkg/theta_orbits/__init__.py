"""Theta lifts of nilpotent orbits, associated cycles and moment-map verification."""

__version__ = "0.1.0"
