"""Convex position of planar convex bodies via dual curve systems."""
from convexpos._kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
