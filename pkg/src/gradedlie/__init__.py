"""Exact computations with Z_m-graded semisimple Lie algebras."""

__version__ = "0.1.0"
