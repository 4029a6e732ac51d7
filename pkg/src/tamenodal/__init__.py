"""Tame non-commutative nodal curve data and their finite-dimensional algebras."""

__version__ = "0.1.0"
