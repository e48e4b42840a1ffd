"""Exact Poisson and Hochschild homology for Sklyanin-type algebras."""

__version__ = "0.1.0"
