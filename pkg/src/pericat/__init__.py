"""Exact-arithmetic blocks, linkage, characters, and tilting modules for
parabolic category O of the periplectic Lie superalgebra pe(n)."""

__version__ = "0.1.0"
