"""Cohomology and formal deformations of Coder pairs in exact arithmetic."""
from ._backend import BACKEND
from .exactlin import SparseMat

__version__ = "0.1.0"

__all__ = ["BACKEND", "SparseMat", "__version__"]
