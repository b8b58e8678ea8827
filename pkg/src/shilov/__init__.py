"""Exact valuation-theoretic invariants for monomial Tate rings."""

__version__ = "0.1.0"
