"""Counting engines for square-and-comb tilings and their triangles."""

from .core import CombSpec, Triangle, TriangleKind

__all__ = ["CombSpec", "Triangle", "TriangleKind"]
__version__ = "0.1.0"
