"""Exact verification and construction of ternary (Hom-)Nambu-Poisson algebras."""

__version__ = "0.1.0"
