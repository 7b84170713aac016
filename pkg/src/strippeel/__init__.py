"""Hyperbolic surfaces with geodesic boundary: strip peeling and weak metrics."""

__version__ = "0.1.0"
